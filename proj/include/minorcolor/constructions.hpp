#pragma once

#include <cstdint>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

/// The tree-like product T(G,H) together with its index structure.
///
/// Layout. Non-leaf nodes of the tree T_{n,k} are numbered breadth-first:
/// the root is node 0 and the child of node t for base vertex v is node
/// t*n + v + 1. The copy G_t occupies product ids t*n .. t*n + n - 1, so
/// product vertex z = t*n + v is the copy of base vertex v in G_t, and its
/// child node theta_t(v) is z + 1. Level of z = depth of its node (root is
/// level 1); level i corresponds to the H vertex h_order[i-1].
struct TreeProduct {
  Graph product;
  Graph base;                      // G
  int k = 0;                       // |V(H)|, number of levels
  int n = 0;                       // |V(G)|
  std::vector<Vertex> h_order;     // u_1..u_k
  std::vector<int> node_parent;    // -1 at the root
  std::vector<int> node_depth;     // 1..k

  int node_count() const { return static_cast<int>(node_parent.size()); }
  int node_of(Vertex z) const { return z / n; }
  Vertex base_of(Vertex z) const { return z % n; }
  int level(Vertex z) const { return node_depth[z / n]; }
  Vertex copy_vertex(int node, Vertex v) const { return node * n + v; }
  /// Child node theta_node(v), or -1 when the children are leaves.
  int child_node(int node, Vertex v) const;
  /// The unique vertex at level i < level(z) whose child subtree holds z.
  Vertex progenitor(Vertex z, int i) const;
  /// All progenitors of z, index i-1 holding the one at level i.
  std::vector<Vertex> progenitors(Vertex z) const;
};

/// n * (1 + n + ... + n^{k-1}), saturating at UINT64_MAX.
std::uint64_t tree_product_size(int n, int k);

/// Builds T(g, h). Throws BudgetExceeded (before allocating) when the vertex
/// count would exceed size_limit, PreconditionError on empty inputs.
TreeProduct tree_product(const Graph& g, const OrderedGraph& h, std::uint64_t size_limit = 1'000'000);

/// Vertex u of h0 becomes S_u = {u*p, ..., u*p + p - 1}; identity order.
OrderedGraph p_blowup(const Graph& h0, int p);
/// p_blowup with every S_u made a clique.
Graph strong_p_blowup(const Graph& h0, int p);
/// K_{k x p}: parts {i*p .. i*p+p-1}, consecutive in the order.
OrderedGraph complete_multipartite(int k, int p);
/// Appends t vertices (ids n..n+t-1) adjacent to everything.
Graph add_universal(const Graph& g, int t);

/// Mycielskian of C5: cycle 0..4, shadow 5+i adjacent to the cycle
/// neighbours of i, apex 10 adjacent to 5..9.
Graph grotzsch_graph();
/// Endpoints (u, v) of the edge removed from the Groetzsch graph to form
/// the gadget R.
inline constexpr Edge kGadgetEdge{0, 1};

struct GadgetExpansion {
  Graph graph;
  /// For edge e = (x,y) of g1 (index into g1.edges()): gadget[e][r] is the
  /// output id of Groetzsch vertex r. gadget[e][0] == x; the others are
  /// n1 + 10e + (r-1).
  std::vector<std::vector<Vertex>> gadget;
};

/// Replaces each edge xy (x < y) of g1 by a copy of R = R0 - uv with u
/// identified with x and a new edge from v to y.
GadgetExpansion gadget_expand(const Graph& g1);

}  // namespace minorcolor
