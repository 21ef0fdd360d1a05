#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minorcolor/coloring.hpp"
#include "minorcolor/errors.hpp"
#include "minorcolor/graph.hpp"

namespace minorcolor {

/// Parameters of the random m-partite construction. Parts are
/// V_i = {i*n, ..., i*n + n - 1}.
struct HmParams {
  int m = 1;
  int n = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
  /// Delete intra-part edges before packing triangles instead of after.
  bool intra_first = false;
};

/// ceil(10^13 m^3 log^2 m), saturating at UINT64_MAX (natural log).
std::uint64_t default_part_size(int m);
/// 1 / sqrt(6(nm - 2)); PreconditionError when nm < 3.
double default_probability(int m, std::uint64_t n);

/// Throws PreconditionError unless m, n >= 1 and 0 <= p <= 1.
void validate(const HmParams& params);

/// G(mn, p): pairs (u, v), u < v, in lexicographic order, each kept when
/// the next std::mt19937_64 output x satisfies (x >> 11) * 2^-53 < p.
Graph sample_base(const HmParams& params);
/// parts[v] = v / n.
std::vector<int> part_labels(const HmParams& params);

/// Greedy edge-disjoint triangle packing in lexicographic (a < b < c)
/// order; returns the union of the chosen triangles' edges, sorted.
std::vector<Edge> greedy_triangular_set(const Graph& g);
/// Triangles that share no edge with any other triangle.
int isolated_triangles(const Graph& g);

struct HmReport {
  std::size_t base_edges = 0;
  std::size_t triangle_edges_removed = 0;
  int triangles_packed = 0;
  std::size_t intra_edges_removed = 0;
  std::size_t final_edges = 0;
  int base_isolated_triangles = 0;
  bool triangle_free = false;
  bool parts_independent = false;
};

struct HmResult {
  Graph graph;
  std::vector<int> parts;
  Coloring part_coloring;
  HmReport report;
};

HmResult build_hm(const HmParams& params);

struct HmAudit {
  bool triangle_free = false;
  bool parts_independent = false;
  int alpha = 0;
  std::vector<Vertex> alpha_witness;
  /// Some independent set of size n other than a part exists. Probabilistic
  /// guarantees are not expected to hold at small n, so this is a
  /// measurement, not a failure.
  std::optional<bool> other_large_independent;
  std::optional<Rational> fractional;
  Verdict fractional_status = Verdict::inconclusive;
  std::string note;
};

HmAudit audit_hm(const Graph& g, const std::vector<int>& parts, SearchBudget budget = SearchBudget::nodes(200'000));

}  // namespace minorcolor
