#include "minorcolor/generators.hpp"

#include <algorithm>
#include <set>

#include "minorcolor/oracles.hpp"
#include "minorcolor/planarity.hpp"
#include "minorcolor/restricted.hpp"

namespace minorcolor::gen {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng, p)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

std::vector<Vertex> random_permutation(Rng& rng, int n) {
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

namespace {

bool closes_triangle(const std::vector<std::set<Vertex>>& adj, Vertex u, Vertex v) {
  for (Vertex w : adj[u])
    if (adj[v].count(w)) return true;
  return false;
}

}  // namespace

Graph random_planar(Rng& rng, int n, double keep, bool triangle_free) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<Edge> edges;
  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : pairs) {
    if (!coin(rng, keep)) continue;
    if (triangle_free && closes_triangle(adj, e.u, e.v)) continue;
    edges.push_back(e);
    if (!is_planar(Graph(n, edges))) {
      edges.pop_back();
      continue;
    }
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  return Graph(n, std::move(edges));
}

GraphWithTd random_partial_ktree(Rng& rng, int n, int k, double keep) {
  // Build a k-tree on a random vertex order, keep each edge with `keep`,
  // decompose along the reverse insertion order.
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> cliques;
  const int base = std::min(n, k + 1);
  std::vector<Vertex> first;
  for (int v = 0; v < base; ++v) first.push_back(v);
  for (int i = 0; i < base; ++i)
    for (int j = i + 1; j < base; ++j) edges.emplace_back(i, j);
  if (base == k + 1)
    for (int skip = 0; skip < base; ++skip) {
      std::vector<Vertex> c;
      for (int i = 0; i < base; ++i)
        if (i != skip) c.push_back(i);
      cliques.push_back(c);
    }
  for (Vertex v = base; v < n; ++v) {
    const auto c = cliques[uniform(rng, 0, static_cast<int>(cliques.size()) - 1)];
    for (Vertex w : c) edges.emplace_back(v, w);
    for (std::size_t skip = 0; skip < c.size(); ++skip) {
      std::vector<Vertex> d{v};
      for (std::size_t i = 0; i < c.size(); ++i)
        if (i != skip) d.push_back(c[i]);
      std::sort(d.begin(), d.end());
      cliques.push_back(d);
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges)
    if (coin(rng, keep)) kept.push_back(e);
  const auto perm = random_permutation(rng, n);
  Graph g = relabel(Graph(n, kept), perm);
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = perm[n - 1 - i];
  auto td = decomposition_from_elimination(g, order);
  return {std::move(g), std::move(td)};
}

GraphWithTd random_restricted(Rng& rng, int t, int a, int nodes, int max_down, int max_bag, bool triangle_free) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Edge> edges;
    std::vector<int> parent;
    std::vector<std::vector<Vertex>> bags;
    int n = 0;
    for (int z = 0; z < nodes; ++z) {
      std::vector<Vertex> up;
      int p = -1;
      if (z > 0) {
        p = uniform(rng, 0, z - 1);
        auto candidates = bags[p];
        std::shuffle(candidates.begin(), candidates.end(), rng);
        const int size = uniform(rng, 0, std::min<int>(t - 1, static_cast<int>(candidates.size())));
        up.assign(candidates.begin(), candidates.begin() + size);
      }
      const int room = std::max(1, std::min(max_down, max_bag - static_cast<int>(up.size())));
      const int k = uniform(rng, 1, room);
      const Graph piece = random_planar(rng, k, 0.6, triangle_free);
      for (const Edge& e : piece.edges()) edges.emplace_back(n + e.u, n + e.v);
      std::vector<Vertex> bag = up;
      for (int i = 0; i < k; ++i) {
        const Vertex x = n + i;
        bag.push_back(x);
        auto pool = up;
        std::shuffle(pool.begin(), pool.end(), rng);
        const int hits = uniform(rng, 0, std::min<int>(a - 1, static_cast<int>(pool.size())));
        for (int h = 0; h < hits; ++h) edges.emplace_back(x, pool[h]);
      }
      n += k;
      std::sort(bag.begin(), bag.end());
      parent.push_back(p);
      bags.push_back(std::move(bag));
    }
    Graph g(n, edges);
    if (triangle_free) {
      // Drop edges closing triangles, lowest index first.
      std::vector<Edge> keep;
      std::vector<std::set<Vertex>> adj(n);
      for (const Edge& e : g.edges()) {
        if (closes_triangle(adj, e.u, e.v)) continue;
        keep.push_back(e);
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
      }
      g = Graph(n, keep);
    }
    auto td = make_decomposition(parent, bags);
    if (!is_valid_td(g, td)) continue;
    if (!is_restricted(g, td, t, a).is_restricted) continue;
    return {std::move(g), std::move(td)};
  }
  throw std::runtime_error("random_restricted: no restricted instance within 200 attempts");
}

}  // namespace minorcolor::gen
