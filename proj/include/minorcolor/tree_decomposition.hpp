#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "minorcolor/coloring.hpp"
#include "minorcolor/errors.hpp"
#include "minorcolor/graph.hpp"

namespace minorcolor {

/// Bags on a rooted tree. parent[root] == -1; bags are kept sorted.
struct RootedTreeDecomposition {
  std::vector<int> parent;
  std::vector<std::vector<Vertex>> bags;
  int root = 0;

  int node_count() const { return static_cast<int>(bags.size()); }
  int width() const;
  /// bag(z) intersected with bag(parent(z)); empty at the root.
  std::vector<Vertex> up(int node) const;
  /// bag(z) minus bag(parent(z)); the whole bag at the root.
  std::vector<Vertex> down(int node) const;
  std::vector<std::vector<int>> children() const;
  /// Nodes in breadth-first order from the root.
  std::vector<int> top_down_order() const;
  std::vector<int> depth() const;
};

/// Normalises bags (sorted, deduplicated) and checks the tree shape.
/// Throws PreconditionError for a malformed tree (cycles, several roots,
/// bad parent ids).
RootedTreeDecomposition make_decomposition(std::vector<int> parent, std::vector<std::vector<Vertex>> bags);

struct TdViolation {
  std::string kind;  // "edge-uncovered", "vertex-missing", "disconnected-trace", "vertex-out-of-range"
  std::vector<Vertex> vertices;
  std::string message;
};

/// Width when all decomposition axioms hold, otherwise every violation found.
std::variant<int, std::vector<TdViolation>> validate_td(const Graph& g, const RootedTreeDecomposition& td);
bool is_valid_td(const Graph& g, const RootedTreeDecomposition& td);

/// g plus a clique on every adhesion up(z). Throws PreconditionError when td
/// is not a decomposition of g.
Graph torso_expansion(const Graph& g, const RootedTreeDecomposition& td);

/// Exact chromatic number by dynamic programming over bag colour
/// partitions, trying c = lower bound .. width+1. Throws BudgetExceeded when
/// width > max_width.
struct TdColoringResult {
  int chromatic_number = 0;
  Coloring coloring;
  std::uint64_t states = 0;
};
TdColoringResult chromatic_td(const Graph& g, const RootedTreeDecomposition& td, int max_width = 8);

/// Decomposition from an elimination ordering (bag of v = v plus its later
/// neighbours in the fill graph), rooted at the last eliminated vertex's bag.
RootedTreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Vertex>& order);

struct TreewidthResult {
  int value = 0;
  bool exact = false;
  std::vector<Vertex> elimination_order;  // witnesses the upper bound
};

/// Greedy min-fill elimination (ties by lowest id).
TreewidthResult treewidth_min_fill(const Graph& g);
/// Exact treewidth by memoised elimination-set search with degeneracy lower
/// bound and min-fill upper bound. Falls back to the min-fill bound
/// (exact = false) when n > exact_limit or the node budget runs out.
TreewidthResult treewidth(const Graph& g, int exact_limit = 20, SearchBudget budget = SearchBudget::nodes(5'000'000));

}  // namespace minorcolor
