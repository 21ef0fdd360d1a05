#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minorcolor/coloring.hpp"
#include "minorcolor/errors.hpp"
#include "minorcolor/graph.hpp"

namespace minorcolor {

/// Outcome of the exact chromatic number search.
///
/// lower is certified by `clique` plus every exhausted decision search;
/// upper by `coloring`. status is yes when lower == upper.
struct ChromaticResult {
  Verdict status = Verdict::inconclusive;
  int lower = 0;
  int upper = 0;
  Coloring coloring;
  std::vector<Vertex> clique;
  std::uint64_t nodes = 0;

  bool exact() const { return status == Verdict::yes; }
  /// The exact value; throws BudgetExceeded when inconclusive.
  int value() const;
};

/// Clique lower bound, DSATUR upper bound, then a DSATUR decision search for
/// each c between them. Vertex order: saturation, then degree (descending),
/// then id.
ChromaticResult chromatic_number(const Graph& g, SearchBudget budget = SearchBudget::nodes(50'000'000));

/// Greedy DSATUR colouring (no backtracking).
Coloring dsatur_coloring(const Graph& g);

struct DecisionResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

/// Proper c-colouring (colours 0..c-1) or none after exhaustive search.
DecisionResult try_k_colorable(const Graph& g, int c, SearchBudget budget = SearchBudget::nodes(50'000'000));
/// Same, throwing BudgetExceeded when the budget runs out.
std::optional<Coloring> k_colorable(const Graph& g, int c, SearchBudget budget = SearchBudget::nodes(50'000'000));

/// Colouring with colors[v] taken from lists[v], or none. Most constrained
/// vertex first. Throws BudgetExceeded when the budget runs out.
std::optional<Coloring> list_color(const Graph& g, const std::vector<std::vector<int>>& lists,
                                   SearchBudget budget = SearchBudget::nodes(50'000'000));

/// (a:b)-colouring by direct search over b-subsets of {1..a}. Throws
/// PreconditionError unless a >= b >= 1, BudgetExceeded when the budget runs
/// out.
std::optional<SetColoring> ab_coloring(const Graph& g, int a, int b,
                                       SearchBudget budget = SearchBudget::nodes(50'000'000));

/// Every proper colouring of g with colours 0..c-1 (not up to symmetry).
/// Intended for tiny graphs.
std::vector<Coloring> all_colorings(const Graph& g, int c);

}  // namespace minorcolor
