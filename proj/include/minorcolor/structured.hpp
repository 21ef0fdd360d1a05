#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minorcolor/embedding.hpp"
#include "minorcolor/graph.hpp"
#include "minorcolor/restricted.hpp"
#include "minorcolor/tree_decomposition.hpp"

namespace minorcolor {

/// Vortex given in the ids of the host graph g.
struct StructuredVortex {
  std::vector<Vertex> boundary;
  std::vector<std::vector<Vertex>> path_bags;
  int face = -1;                       // face index of the node's embedding
  std::optional<std::vector<Edge>> edges;  // default: torso edges among its vertices not drawn on the surface
};

/// Per-node data of a structured decomposition. The embedding uses local
/// ids: local vertex i is host vertex surface[i].
struct StructuredNode {
  std::vector<Vertex> apex;        // A_v
  std::vector<Vertex> inner_apex;  // A'_v
  std::vector<Vertex> surface;     // V(G_v), sorted
  RotationEmbedding embedding;
  std::vector<StructuredVortex> vortices;
};

struct StructuredDecomposition {
  RootedTreeDecomposition td;
  std::vector<StructuredNode> nodes;
  int t = 1;
  int a_h = 0;
};

/// Every syntactic condition that fails, each prefixed with its node.
/// Empty when the input is well formed.
std::vector<std::string> structured_violations(const Graph& g, const StructuredDecomposition& sd);

/// Vertex set of a vortex (bags, boundary and explicit edges).
std::vector<Vertex> vortex_vertices(const StructuredVortex& v);

/// Edges of the vortex graph in host ids.
std::vector<Edge> vortex_edges(const Graph& torso, const StructuredNode& node, const StructuredVortex& v);

/// Result of re-parenting along skippable edges. Bags use host ids and the
/// decomposition is one of g[core].
struct NormalizedDecomposition {
  RootedTreeDecomposition td;
  std::vector<int> new_parent;            // f(w); -1 at the root
  std::vector<std::pair<int, int>> skippable;  // (parent, child) edges of T
  int root_fallbacks = 0;                 // nodes whose whole root path was skippable
};

/// Bags beta''(v) = (beta(v) cap C) down v  union  (A'_v cap C), parent f(w).
/// Throws PreconditionError naming the node pair when a child meeting the
/// surface of v has an adhesion vertex outside V(G_v) and A'_v.
NormalizedDecomposition normalize_skippable(const Graph& g, const StructuredDecomposition& sd,
                                            const std::vector<Vertex>& core);

struct NodeLowReport {
  int node = 0;
  int genus = 0;
  int vortex_count = 0;
  std::vector<Vertex> removed;  // L'_v in host ids
  int apex_outside = 0;         // |A_v \ up(v)|
  int s_size = 0;               // |S_v|
  int bound = 0;                // 26g + 9m + a_H + apex_outside + s_size
  int lemma_treewidth = 0;
  bool lemma_within_bound = true;
};

struct SplitResult {
  std::vector<Vertex> low;   // L
  std::vector<Vertex> core;  // C
  Graph core_graph;          // g[C], local ids
  std::vector<Vertex> core_ids;  // local -> host
  RootedTreeDecomposition core_td;  // local ids
  NormalizedDecomposition normalized;  // host ids
  RestrictednessReport restricted;
  int restricted_a = 0;      // t, or a when a K_{a,b} bound was used
  std::vector<NodeLowReport> nodes;
  int low_treewidth = 0;
  bool low_treewidth_exact = false;
  int low_bound = 0;         // max over nodes of NodeLowReport::bound
  bool low_within_bound = false;
};

/// L_v = (A_v \ up(v)) + vortex vertices + L'_v + S_v, L = union, C = rest.
/// kab = (a,b) enables S_v (vertices of G_v with >= a neighbours in A_v).
SplitResult split_low_high(const Graph& g, const StructuredDecomposition& sd,
                           std::optional<std::pair<int, int>> kab = std::nullopt);

}  // namespace minorcolor
