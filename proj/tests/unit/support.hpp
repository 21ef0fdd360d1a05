#pragma once

// Brute-force oracles used to cross-check the library. Deliberately naive:
// subset enumeration and plain backtracking in id order.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "minorcolor/graph.hpp"

namespace support {

using minorcolor::Graph;
using minorcolor::Vertex;

inline std::string fixture(const std::string& name) { return std::string(MINORCOLOR_FIXTURES) + "/" + name; }

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return adj;
}

// n <= 20.
inline int brute_clique(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const int n = g.order();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (s >> v & 1) ok = (adj[v] & s) == (s & ~(1u << v));
    if (ok) best = size;
  }
  return best;
}

inline int brute_alpha(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const int n = g.order();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (s >> v & 1) ok = (adj[v] & s) == 0;
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

inline bool color_from(const Graph& g, int c, Vertex v, std::vector<int>& col) {
  if (v == g.order()) return true;
  for (int k = 0; k < c; ++k) {
    bool ok = true;
    for (Vertex w : g.neighbors(v))
      if (w < v && col[w] == k) ok = false;
    if (!ok) continue;
    col[v] = k;
    if (color_from(g, c, v + 1, col)) return true;
  }
  return false;
}

inline bool brute_colorable(const Graph& g, int c) {
  std::vector<int> col(g.order(), -1);
  return color_from(g, c, 0, col);
}

inline int brute_chromatic(const Graph& g) {
  int c = 0;
  while (!brute_colorable(g, c)) ++c;
  return c;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<minorcolor::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace support
