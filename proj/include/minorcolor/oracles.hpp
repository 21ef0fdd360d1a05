#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "minorcolor/errors.hpp"
#include "minorcolor/graph.hpp"

namespace minorcolor {

/// A vertex set witnessing a clique or independence number.
struct VertexSetWitness {
  int size = 0;
  std::vector<Vertex> vertices;
};

/// Maximum clique by branch and bound with greedy colouring bounds.
VertexSetWitness max_clique(const Graph& g);
int clique_number(const Graph& g);

/// Maximum independent set by branching on a maximum-degree vertex with
/// degree-0/1 reductions. Independent of the clique routine, so
/// clique_number(complement(g)) is a genuine cross-check.
VertexSetWitness max_independent_set(const Graph& g);
int independence_number(const Graph& g);

bool is_clique(const Graph& g, std::span<const Vertex> vs);
bool is_independent(const Graph& g, std::span<const Vertex> vs);

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);
bool is_triangle_free(const Graph& g);

/// Disjoint A, B with |A| = a, |B| = b and every A-B pair an edge.
struct BicliqueWitness {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};
std::optional<BicliqueWitness> find_complete_bipartite(const Graph& g, int a, int b);
bool contains_complete_bipartite(const Graph& g, int a, int b);

/// Vertex connectivity via unit-capacity max flow on the split graph.
/// Complete graphs report n - 1. Throws std::invalid_argument for n < 2.
int connectivity(const Graph& g);
/// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).
int local_connectivity(const Graph& g, Vertex s, Vertex t);

/// Branch sets of a minor model, indexed by the vertices of the minor.
struct MinorModel {
  std::vector<std::vector<Vertex>> branch_sets;
};

struct MinorResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<MinorModel> model;
  std::uint64_t nodes = 0;
};

/// Exhaustive minor test: searches contraction partitions of g (memoised by
/// partition) and at each one tests whether f is a subgraph. Intended for
/// |V(f)| <= 8; returns inconclusive once the node budget is spent.
MinorResult has_minor(const Graph& g, const Graph& f, SearchBudget budget = {});

/// Checks a model: disjoint, non-empty, connected branch sets with an edge
/// between the sets of every edge of f.
bool is_minor_model(const Graph& g, const Graph& f, const MinorModel& model);

/// Injective edge-preserving map f -> g, if one exists within the budget.
/// The returned vector maps each f vertex to a g vertex.
std::optional<std::vector<Vertex>> find_subgraph(const Graph& g, const Graph& f,
                                                 NodeCounter* counter = nullptr);

}  // namespace minorcolor
