#include <doctest.h>

#include <cmath>
#include <set>

#include "minorcolor/errors.hpp"
#include "minorcolor/exact_coloring.hpp"
#include "minorcolor/oracles.hpp"
#include "minorcolor/random_hm.hpp"
#include "support.hpp"

using namespace minorcolor;

TEST_CASE("default parameters") {
  CHECK(default_part_size(1) == 0);
  // 10^13 * 8 * log(2)^2 = 3.8435e13.
  const double expected = std::ceil(1e13 * 8 * std::log(2.0) * std::log(2.0));
  CHECK(static_cast<double>(default_part_size(2)) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(default_part_size(1000000) == UINT64_MAX);
  CHECK(default_probability(2, 3) == doctest::Approx(1.0 / std::sqrt(24.0)));
  CHECK_THROWS_AS(default_probability(1, 2), PreconditionError);
  CHECK_THROWS_AS(validate(HmParams{0, 1, 0.5, 0, false}), PreconditionError);
  CHECK_THROWS_AS(validate(HmParams{1, 1, 1.5, 0, false}), PreconditionError);
}

TEST_CASE("sample_base examples") {
  CHECK(sample_base(HmParams{2, 3, 0.0, 1, false}) == named::empty(6));
  CHECK(sample_base(HmParams{2, 3, 1.0, 1, false}) == named::complete(6));
  const HmParams half{2, 4, 0.5, 42, false};
  const Graph a = sample_base(half);
  CHECK(a.size() <= 28);
  CHECK(a == sample_base(half));
  CHECK(part_labels(half) == std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1});
}

TEST_CASE("sample_base follows the documented stream") {
  const HmParams params{2, 3, 0.37, 9, false};
  std::mt19937_64 rng(params.seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < params.p) edges.emplace_back(u, v);
  CHECK(sample_base(params) == Graph(6, edges));
}

TEST_CASE("greedy triangular set examples") {
  CHECK(greedy_triangular_set(named::complete(4)) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(greedy_triangular_set(named::cycle(6)).empty());
  const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(greedy_triangular_set(bowtie).size() == 6);
  CHECK(isolated_triangles(bowtie) == 2);
  CHECK(isolated_triangles(named::complete(4)) == 0);
}

TEST_CASE("property: the triangular set is maximal and edge-disjoint") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = support::random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.6);
    const auto set = greedy_triangular_set(g);
    CHECK(set.size() % 3 == 0);
    std::set<Edge> chosen(set.begin(), set.end());
    CHECK(chosen.size() == set.size());
    // No triangle of g avoids the chosen edges.
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = a + 1; b < g.order(); ++b)
        for (Vertex c = b + 1; c < g.order(); ++c)
          if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))
            CHECK((chosen.count({a, b}) + chosen.count({a, c}) + chosen.count({b, c})) > 0);
  }
}

TEST_CASE("build_hm examples") {
  const auto one = build_hm(HmParams{1, 5, 0.9, 3, false});
  CHECK(one.graph.size() == 0);
  CHECK(chromatic_number(one.graph).value() == 1);

  const auto two = build_hm(HmParams{2, 4, 1.0, 0, false});
  CHECK(two.report.triangle_free);
  CHECK(is_triangle_free(two.graph));
  CHECK(chromatic_number(two.graph).value() <= 2);
  CHECK(two.report.base_edges == 28);

  const auto three = build_hm(HmParams{3, 6, 0.4, 7, false});
  CHECK(is_triangle_free(three.graph));
  CHECK(is_proper(three.graph, three.part_coloring));
  CHECK(chromatic_number(three.graph).value() <= 3);
  CHECK(three.report.final_edges == three.graph.size());
  CHECK(three.report.base_edges ==
        three.report.final_edges + three.report.triangle_edges_removed + three.report.intra_edges_removed);
}

TEST_CASE("property: H_m is triangle-free with independent parts, in either removal order") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    HmParams params{1 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed % 7), 0.3 + 0.01 * seed, seed,
                    seed % 2 == 1};
    const auto r = build_hm(params);
    int triangles = 0;
    for (Vertex a = 0; a < r.graph.order(); ++a)
      for (Vertex b = a + 1; b < r.graph.order(); ++b)
        for (Vertex c = b + 1; c < r.graph.order(); ++c)
          triangles += r.graph.adjacent(a, b) && r.graph.adjacent(a, c) && r.graph.adjacent(b, c);
    CHECK(triangles == 0);
    for (const Edge& e : r.graph.edges()) CHECK(r.parts[e.u] != r.parts[e.v]);
    CHECK(is_proper(r.graph, r.part_coloring));
    CHECK(build_hm(params).graph == r.graph);
  }
}

TEST_CASE("audit_hm examples") {
  const auto one = build_hm(HmParams{1, 4, 0.5, 1, false});
  const auto a1 = audit_hm(one.graph, one.parts);
  CHECK(a1.triangle_free);
  CHECK(a1.alpha == 4);
  REQUIRE(a1.other_large_independent.has_value());
  CHECK_FALSE(*a1.other_large_independent);

  const auto full = build_hm(HmParams{2, 3, 1.0, 0, false});
  const auto a2 = audit_hm(full.graph, full.parts);
  CHECK(a2.triangle_free);
  CHECK(a2.parts_independent);
  CHECK(a2.alpha == support::brute_alpha(full.graph));
  REQUIRE(a2.fractional_status == Verdict::yes);
  REQUIRE(a2.fractional.has_value());
  CHECK(*a2.fractional >= Rational(6, a2.alpha));
  CHECK(*a2.fractional <= 2);
  CHECK_FALSE(a2.note.empty());
}
