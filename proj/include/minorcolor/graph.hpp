#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace minorcolor {

using Vertex = int;

/// Unordered vertex pair stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertex ids 0..n-1.
///
/// Immutable after construction. The edge list is sorted and free of
/// duplicates; adjacency lists are sorted, so neighbourhood queries are
/// binary searches. Loops and out-of-range endpoints are rejected with
/// std::invalid_argument, duplicate edges are merged.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  bool adjacent(Vertex a, Vertex b) const;
  /// Position of edge {a,b} in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// A graph together with the sequence u_1..u_k of its vertices.
///
/// order[i] is the vertex playing the role of u_{i+1}.
struct OrderedGraph {
  Graph graph;
  std::vector<Vertex> order;

  /// Identity order.
  explicit OrderedGraph(Graph g);
  OrderedGraph(Graph g, std::vector<Vertex> order);

  int order_size() const { return static_cast<int>(order.size()); }
};

/// Result of taking an induced subgraph: the new graph plus, for every new
/// id, the original vertex it came from.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph remove_vertices(const Graph& g, std::span<const Vertex> vertices);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Renames vertex v to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);
/// Connected components, each a sorted vertex list, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

namespace named {

Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen();
/// Rim cycle on 0..rim-1 with hub vertex `rim`.
Graph wheel(int rim);

}  // namespace named

}  // namespace minorcolor
