#include "minorcolor/random_hm.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "minorcolor/fractional.hpp"
#include "minorcolor/oracles.hpp"

namespace minorcolor {

std::uint64_t default_part_size(int m) {
  if (m < 1) throw PreconditionError("m must be >= 1");
  const long double l = std::log(static_cast<long double>(m));
  const long double v = std::ceil(1e13L * m * m * static_cast<long double>(m) * l * l);
  if (v >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(v);
}

double default_probability(int m, std::uint64_t n) {
  const long double nm = static_cast<long double>(n) * m;
  if (nm < 3) throw PreconditionError("default edge probability needs nm >= 3");
  return static_cast<double>(1.0L / std::sqrt(6.0L * (nm - 2)));
}

void validate(const HmParams& params) {
  if (params.m < 1 || params.n < 1) throw PreconditionError("H_m needs m >= 1 and n >= 1");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw PreconditionError("edge probability must lie in [0, 1]");
}

Graph sample_base(const HmParams& params) {
  validate(params);
  const int total = params.m * params.n;
  std::mt19937_64 rng(params.seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < total; ++u)
    for (Vertex v = u + 1; v < total; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < params.p) edges.emplace_back(u, v);
    }
  return Graph(total, std::move(edges));
}

std::vector<int> part_labels(const HmParams& params) {
  std::vector<int> parts(params.m * params.n);
  for (std::size_t v = 0; v < parts.size(); ++v) parts[v] = static_cast<int>(v) / params.n;
  return parts;
}

std::vector<Edge> greedy_triangular_set(const Graph& g) {
  std::set<Edge> used;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbors(a)) {
      if (b <= a || used.count({a, b})) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= b || !g.adjacent(a, c)) continue;
        if (used.count({a, b}) || used.count({b, c}) || used.count({a, c})) continue;
        used.insert({a, b});
        used.insert({b, c});
        used.insert({a, c});
      }
    }
  return {used.begin(), used.end()};
}

int isolated_triangles(const Graph& g) {
  std::vector<int> on_edge(g.size(), 0);
  std::vector<std::array<int, 3>> triangles;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= b || !g.adjacent(a, c)) continue;
        std::array<int, 3> t{g.edge_index(a, b), g.edge_index(b, c), g.edge_index(a, c)};
        for (int e : t) ++on_edge[e];
        triangles.push_back(t);
      }
    }
  int count = 0;
  for (const auto& t : triangles)
    if (on_edge[t[0]] == 1 && on_edge[t[1]] == 1 && on_edge[t[2]] == 1) ++count;
  return count;
}

namespace {

Graph without(const Graph& g, const std::vector<Edge>& removed) {
  std::vector<Edge> keep;
  std::set<Edge> gone(removed.begin(), removed.end());
  for (const Edge& e : g.edges())
    if (!gone.count(e)) keep.push_back(e);
  return Graph(g.order(), std::move(keep));
}

std::vector<Edge> intra_edges(const Graph& g, const std::vector<int>& parts) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (parts[e.u] == parts[e.v]) out.push_back(e);
  return out;
}

bool parts_independent(const Graph& g, const std::vector<int>& parts) {
  for (const Edge& e : g.edges())
    if (parts[e.u] == parts[e.v]) return false;
  return true;
}

}  // namespace

HmResult build_hm(const HmParams& params) {
  HmResult r;
  const Graph base = sample_base(params);
  r.parts = part_labels(params);
  r.report.base_edges = base.size();
  r.report.base_isolated_triangles = isolated_triangles(base);
  Graph g = base;
  auto drop_intra = [&] {
    const auto intra = intra_edges(g, r.parts);
    r.report.intra_edges_removed = intra.size();
    g = without(g, intra);
  };
  auto drop_triangles = [&] {
    const auto tri = greedy_triangular_set(g);
    r.report.triangle_edges_removed = tri.size();
    r.report.triangles_packed = static_cast<int>(tri.size() / 3);
    g = without(g, tri);
  };
  if (params.intra_first) {
    drop_intra();
    drop_triangles();
  } else {
    drop_triangles();
    drop_intra();
  }
  r.graph = std::move(g);
  r.report.final_edges = r.graph.size();
  r.report.triangle_free = is_triangle_free(r.graph);
  r.report.parts_independent = parts_independent(r.graph, r.parts);
  r.part_coloring.colors = r.parts;
  if (!r.report.triangle_free) throw std::logic_error("build_hm output contains a triangle");
  ensure_proper(r.graph, r.part_coloring, "build_hm part colouring");
  return r;
}

HmAudit audit_hm(const Graph& g, const std::vector<int>& parts, SearchBudget budget) {
  if (static_cast<int>(parts.size()) != g.order()) throw PreconditionError("one part label per vertex required");
  HmAudit a;
  a.triangle_free = is_triangle_free(g);
  a.parts_independent = parts_independent(g, parts);
  const auto mis = max_independent_set(g);
  a.alpha = mis.size;
  a.alpha_witness = mis.vertices;
  std::map<int, std::vector<Vertex>> by_part;
  for (Vertex v = 0; v < g.order(); ++v) by_part[parts[v]].push_back(v);
  const int n = by_part.empty() ? 0 : static_cast<int>(by_part.begin()->second.size());
  // Search for an independent n-set other than a part: enumerate maximal
  // independent sets of size >= n; any n-subset of one that is not a part
  // qualifies unless the set itself is exactly a part.
  std::vector<std::vector<Vertex>> sets;
  if (maximal_independent_sets(g, sets, budget.node_limit)) {
    bool other = false;
    for (const auto& s : sets) {
      if (static_cast<int>(s.size()) < n) continue;
      bool is_part = static_cast<int>(s.size()) == n;
      if (is_part) is_part = by_part[parts[s.front()]] == s;
      if (!is_part) other = true;
    }
    a.other_large_independent = other;
  }
  const auto f = fractional_chromatic(g, budget);
  a.fractional_status = f.status;
  if (f.status == Verdict::yes) a.fractional = f.value;
  a.note =
      "construction guarantees (triangle-free, parts independent) always hold; alpha <= n and chi_f = m are "
      "probabilistic statements for astronomically large n and are only measured here";
  return a;
}

}  // namespace minorcolor
