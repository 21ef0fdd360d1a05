#include "minorcolor/constructions.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "minorcolor/errors.hpp"

namespace minorcolor {

int TreeProduct::child_node(int node, Vertex v) const {
  if (node_depth[node] >= k) return -1;
  return node * n + v + 1;
}

Vertex TreeProduct::progenitor(Vertex z, int i) const {
  if (i < 1 || i >= level(z)) throw PreconditionError("progenitor level must lie in [1, level(z))");
  int node = node_of(z);
  Vertex cur = z;
  while (node_depth[node] > i) {
    cur = node - 1;  // the vertex whose child is `node`
    node = node_of(cur);
  }
  return cur;
}

std::vector<Vertex> TreeProduct::progenitors(Vertex z) const {
  std::vector<Vertex> out(level(z) - 1);
  int node = node_of(z);
  while (node != 0) {
    const Vertex p = node - 1;
    node = node_of(p);
    out[node_depth[node] - 1] = p;
  }
  return out;
}

std::uint64_t tree_product_size(int n, int k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0, power = 1;
  for (int i = 0; i < k; ++i) {
    if (total > kMax - power) return kMax;
    total += power;
    if (i + 1 < k) {
      if (n != 0 && power > kMax / static_cast<std::uint64_t>(n)) return kMax;
      power *= n;
    }
  }
  if (n != 0 && total > kMax / static_cast<std::uint64_t>(n)) return kMax;
  return total * n;
}

TreeProduct tree_product(const Graph& g, const OrderedGraph& h, std::uint64_t size_limit) {
  const int n = g.order();
  const int k = h.order_size();
  if (n < 1 || k < 1) throw PreconditionError("tree_product needs non-empty G and H");
  const std::uint64_t predicted = tree_product_size(n, k);
  if (predicted > size_limit) {
    throw BudgetExceeded("tree product would have " + std::to_string(predicted) + " vertices, limit " +
                             std::to_string(size_limit),
                         predicted, size_limit);
  }
  TreeProduct tp;
  tp.base = g;
  tp.n = n;
  tp.k = k;
  tp.h_order = h.order;
  const int nodes = static_cast<int>(predicted / n);
  tp.node_parent.assign(nodes, -1);
  tp.node_depth.assign(nodes, 1);
  for (int s = 1; s < nodes; ++s) {
    tp.node_parent[s] = (s - 1) / n;
    tp.node_depth[s] = tp.node_depth[tp.node_parent[s]] + 1;
  }

  // level[i] lists the lower levels j < i with u_j u_i in E(H).
  std::vector<Vertex> level_of(h.graph.order());
  for (int i = 0; i < k; ++i) level_of[h.order[i]] = i + 1;
  std::vector<std::vector<int>> lower(k + 1);
  for (const Edge& e : h.graph.edges()) {
    const int a = level_of[e.u], b = level_of[e.v];
    lower[std::max(a, b)].push_back(std::min(a, b));
  }

  std::vector<Edge> edges;
  for (int t = 0; t < nodes; ++t) {
    for (const Edge& e : g.edges()) edges.emplace_back(t * n + e.u, t * n + e.v);
    const int depth = tp.node_depth[t];
    if (lower[depth].empty()) continue;
    for (Vertex v = 0; v < n; ++v) {
      const Vertex z = t * n + v;
      const auto prog = tp.progenitors(z);
      for (int i : lower[depth]) edges.emplace_back(prog[i - 1], z);
    }
  }
  tp.product = Graph(static_cast<int>(predicted), std::move(edges));
  return tp;
}

OrderedGraph p_blowup(const Graph& h0, int p) {
  if (p < 1) throw PreconditionError("blowup factor p must be >= 1");
  std::vector<Edge> edges;
  for (const Edge& e : h0.edges())
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) edges.emplace_back(e.u * p + a, e.v * p + b);
  return OrderedGraph(Graph(h0.order() * p, std::move(edges)));
}

Graph strong_p_blowup(const Graph& h0, int p) {
  auto blown = p_blowup(h0, p);
  std::vector<Edge> edges = blown.graph.edges();
  for (Vertex u = 0; u < h0.order(); ++u)
    for (int a = 0; a < p; ++a)
      for (int b = a + 1; b < p; ++b) edges.emplace_back(u * p + a, u * p + b);
  return Graph(h0.order() * p, std::move(edges));
}

OrderedGraph complete_multipartite(int k, int p) {
  if (k < 1) throw PreconditionError("complete_multipartite needs k >= 1");
  return p_blowup(named::complete(k), p);
}

Graph add_universal(const Graph& g, int t) {
  if (t < 0) throw PreconditionError("number of universal vertices must be >= 0");
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  for (int i = 0; i < t; ++i)
    for (Vertex v = 0; v < n + i; ++v) edges.emplace_back(v, n + i);
  return Graph(n + t, std::move(edges));
}

Graph grotzsch_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, (i + 1) % 5);
    edges.emplace_back(5 + i, (i + 4) % 5);
    edges.emplace_back(5 + i, 10);
  }
  return Graph(11, std::move(edges));
}

GadgetExpansion gadget_expand(const Graph& g1) {
  const Graph r0 = grotzsch_graph();
  const int n1 = g1.order();
  const int m1 = static_cast<int>(g1.size());
  GadgetExpansion out;
  std::vector<Edge> edges;
  out.gadget.reserve(m1);
  for (int e = 0; e < m1; ++e) {
    const Edge& xy = g1.edges()[e];
    std::vector<Vertex> id(r0.order());
    id[kGadgetEdge.u] = xy.u;
    for (int r = 0, next = 0; r < r0.order(); ++r)
      if (r != kGadgetEdge.u) id[r] = n1 + 10 * e + next++;
    for (const Edge& re : r0.edges())
      if (re != kGadgetEdge) edges.emplace_back(id[re.u], id[re.v]);
    edges.emplace_back(id[kGadgetEdge.v], xy.v);
    out.gadget.push_back(std::move(id));
  }
  out.graph = Graph(n1 + 10 * m1, std::move(edges));
  return out;
}

}  // namespace minorcolor
