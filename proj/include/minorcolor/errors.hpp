#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minorcolor {

/// A construction would exceed its vertex budget. Thrown before allocating.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t predicted, std::uint64_t limit)
      : std::runtime_error(what), predicted_(predicted), limit_(limit) {}
  std::uint64_t predicted() const { return predicted_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t predicted_;
  std::uint64_t limit_;
};

/// A search outcome that contradicts a theorem the algorithm relies on
/// (for instance a planar graph with no 4-coloring found). Never caught
/// internally.
class LemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input violates a structural precondition (invalid decomposition,
/// improper coloring handed in, malformed embedding, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Tri-state answer of a bounded exhaustive search.
enum class Verdict { yes, no, inconclusive };

const char* to_string(Verdict v);

/// Node budget shared by the branch-and-bound searches. A limit of 0 means
/// unlimited.
struct SearchBudget {
  std::uint64_t node_limit = 0;

  static SearchBudget unlimited() { return {}; }
  static SearchBudget nodes(std::uint64_t n) { return {n}; }
};

/// Counts search nodes against a SearchBudget.
class NodeCounter {
 public:
  explicit NodeCounter(SearchBudget budget) : limit_(budget.node_limit) {}
  /// Returns false once the budget is spent.
  bool tick() {
    ++used_;
    return limit_ == 0 || used_ <= limit_;
  }
  bool exhausted() const { return limit_ != 0 && used_ > limit_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace minorcolor
