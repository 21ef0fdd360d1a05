#include "minorcolor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace minorcolor {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  const auto& list = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  const Vertex other = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(list.begin(), list.end(), other);
}

int Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return -1;
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

OrderedGraph::OrderedGraph(Graph g) : graph(std::move(g)), order(graph.order()) {
  std::iota(order.begin(), order.end(), 0);
}

OrderedGraph::OrderedGraph(Graph g, std::vector<Vertex> ord)
    : graph(std::move(g)), order(std::move(ord)) {
  if (static_cast<int>(order.size()) != graph.order()) {
    throw std::invalid_argument("vertex order must list every vertex exactly once");
  }
  std::vector<char> seen(order.size(), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= graph.order() || seen[v]) {
      throw std::invalid_argument("vertex order is not a permutation");
    }
    seen[v] = 1;
  }
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> original(vertices.begin(), vertices.end());
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()), original.end());
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < original.size(); ++i) index[original[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
  }
  return {Graph(static_cast<int>(original.size()), std::move(edges)), std::move(original)};
}

Graph remove_vertices(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> drop(g.order(), 0);
  for (Vertex v : vertices) drop[v] = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep).graph;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), std::move(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), std::move(edges));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> result;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(result.size());
    std::vector<Vertex> members{s};
    comp[s] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbors(members[head])) {
        if (comp[w] < 0) {
          comp[w] = id;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.push_back(std::move(members));
  }
  return result;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace named {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, std::move(edges));
}

Graph petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph(10, std::move(edges));
}

Graph wheel(int rim) {
  std::vector<Edge> edges = cycle(rim).edges();
  for (Vertex v = 0; v < rim; ++v) edges.emplace_back(v, rim);
  return Graph(rim + 1, std::move(edges));
}

}  // namespace named

}  // namespace minorcolor
