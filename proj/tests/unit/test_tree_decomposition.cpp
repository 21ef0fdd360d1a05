#include <doctest.h>

#include <set>

#include "minorcolor/errors.hpp"
#include "minorcolor/exact_coloring.hpp"
#include "minorcolor/generators.hpp"
#include "minorcolor/json_io.hpp"
#include "minorcolor/oracles.hpp"
#include "minorcolor/planarity.hpp"
#include "minorcolor/restricted.hpp"
#include "minorcolor/structured.hpp"
#include "minorcolor/tree_decomposition.hpp"
#include "support.hpp"

using namespace minorcolor;

namespace {

RootedTreeDecomposition chain(std::vector<std::vector<Vertex>> bags) {
  std::vector<int> parent(bags.size());
  for (std::size_t i = 0; i < bags.size(); ++i) parent[i] = static_cast<int>(i) - 1;
  return make_decomposition(parent, std::move(bags));
}

RootedTreeDecomposition single_bag(const Graph& g) {
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return make_decomposition({-1}, {all});
}

std::vector<Vertex> iota(int n) {
  std::vector<Vertex> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("validate_td examples") {
  const auto p4 = validate_td(named::path(4), chain({{0, 1}, {1, 2}, {2, 3}}));
  REQUIRE(std::holds_alternative<int>(p4));
  CHECK(std::get<int>(p4) == 1);

  const auto k3 = validate_td(named::complete(3), chain({{0, 1}, {1, 2}}));
  REQUIRE(std::holds_alternative<std::vector<TdViolation>>(k3));
  const auto& bad = std::get<std::vector<TdViolation>>(k3);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].kind == "edge-uncovered");
  CHECK(bad[0].vertices == std::vector<Vertex>{0, 2});

  const auto c4 = validate_td(named::cycle(4), single_bag(named::cycle(4)));
  REQUIRE(std::holds_alternative<int>(c4));
  CHECK(std::get<int>(c4) == 3);

  // Vertex 0 in nodes 0 and 2 but not in node 1.
  const auto gap = validate_td(named::path(3), chain({{0, 1}, {1, 2}, {0, 2}}));
  REQUIRE(std::holds_alternative<std::vector<TdViolation>>(gap));
  CHECK(std::get<std::vector<TdViolation>>(gap)[0].kind == "disconnected-trace");

  const auto missing = validate_td(named::empty(3), chain({{0}, {1}}));
  REQUIRE(std::holds_alternative<std::vector<TdViolation>>(missing));
  CHECK(std::get<std::vector<TdViolation>>(missing)[0].kind == "vertex-missing");

  CHECK_THROWS_AS(make_decomposition({-1, -1}, {{0}, {1}}), PreconditionError);
  CHECK_THROWS_AS(make_decomposition({1, 0}, {{0}, {1}}), PreconditionError);
}

TEST_CASE("torso expansion examples") {
  const Graph c5 = named::cycle(5);
  CHECK(torso_expansion(c5, single_bag(c5)) == c5);
  CHECK(torso_expansion(named::path(3), chain({{0, 1}, {1, 2}})) == named::path(3));

  const Graph star = named::star(3);
  const auto leaves = make_decomposition({-1, 0, 0}, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(torso_expansion(star, leaves) == star);
  // Adhesion {0,1,2} gains the edge 1-2.
  const auto wide = make_decomposition({-1, 0}, {{0, 1, 2}, {0, 1, 2, 3}});
  const Graph t = torso_expansion(star, wide);
  CHECK(t.size() == 4);
  CHECK(t.adjacent(1, 2));
  CHECK_FALSE(t.adjacent(1, 3));

  CHECK_THROWS_AS(torso_expansion(named::complete(3), chain({{0, 1}, {1, 2}})), PreconditionError);
}

TEST_CASE("chromatic number on a decomposition") {
  const auto tree = chromatic_td(named::path(5), chain({{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  CHECK(tree.chromatic_number == 2);
  CHECK(is_proper(named::path(5), tree.coloring));

  const auto c5 = chromatic_td(named::cycle(5), chain({{0, 1, 4}, {1, 3, 4}, {1, 2, 3}}));
  CHECK(c5.chromatic_number == 3);
  CHECK(is_proper(named::cycle(5), c5.coloring));

  CHECK(chromatic_td(named::empty(3), single_bag(named::empty(3))).chromatic_number == 1);
  CHECK_THROWS_AS(chromatic_td(named::complete(10), single_bag(named::complete(10)), 8), BudgetExceeded);
}

TEST_CASE("property: chromatic_td agrees with brute force") {
  gen::Rng rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = gen::uniform(rng, 1, 10);
    const auto inst = gen::random_partial_ktree(rng, n, gen::uniform(rng, 1, 4));
    REQUIRE(is_valid_td(inst.graph, inst.td));
    const auto r = chromatic_td(inst.graph, inst.td);
    CHECK(r.chromatic_number == support::brute_chromatic(inst.graph));
    CHECK(is_proper(inst.graph, r.coloring));
    CHECK(r.coloring.distinct_colors() == r.chromatic_number);
  }
  // Decompositions from arbitrary elimination orders work as well.
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 8), 0.4);
    const auto td = decomposition_from_elimination(g, gen::random_permutation(rng, g.order()));
    REQUIRE(is_valid_td(g, td));
    if (td.width() > 8) continue;
    CHECK(chromatic_td(g, td).chromatic_number == support::brute_chromatic(g));
  }
}

TEST_CASE("treewidth examples") {
  CHECK(treewidth(named::complete(5)).value == 4);
  CHECK(treewidth(named::cycle(6)).value == 2);
  CHECK(treewidth(named::path(6)).value == 1);
  const auto p = treewidth(named::petersen());
  CHECK(p.exact);
  CHECK(p.value == 4);
  const auto td = decomposition_from_elimination(named::petersen(), p.elimination_order);
  CHECK(td.width() == 4);
  CHECK(is_valid_td(named::petersen(), td));
  CHECK(treewidth_min_fill(named::petersen()).value >= 4);
}

TEST_CASE("restrictedness examples") {
  const Graph w = named::wheel(5);
  CHECK(is_restricted(w, single_bag(w), 1, 1).is_restricted);

  const Graph k5 = named::complete(5);
  const auto nonplanar = is_restricted(k5, single_bag(k5), 1, 1);
  CHECK_FALSE(nonplanar.is_restricted);
  REQUIRE(nonplanar.violations.size() == 1);
  CHECK(nonplanar.violations[0].node == 0);

  // Child adhesion {0,1,2} has 3 > t-1 vertices for t=3.
  const Graph k4 = named::complete(4);
  const auto td = make_decomposition({-1, 0}, {{0, 1, 2}, {0, 1, 2, 3}});
  const auto big = is_restricted(k4, td, 3, 4);
  CHECK_FALSE(big.is_restricted);
  CHECK(is_restricted(k4, td, 4, 4).is_restricted);
  // Vertex 3 has 3 neighbours in the adhesion: needs a >= 4.
  CHECK_FALSE(is_restricted(k4, td, 4, 3).is_restricted);
}

TEST_CASE("restricted colouring examples") {
  const Graph w = named::wheel(5);
  const auto apex = restricted_color(w, single_bag(w), 1, 1, ColorMode::apex);
  CHECK(is_proper(w, apex.coloring));
  CHECK(apex.colors_used <= 4);
  CHECK(apex.palette == 4);

  // Three K4s glued on edges: adhesions of size 2, t = 3.
  const Graph stack(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                        {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5},
                        {2, 6}, {2, 7}, {3, 6}, {3, 7}, {6, 7}});
  const auto std3 = make_decomposition({-1, 0, 0}, {{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 6, 7}});
  REQUIRE(is_restricted(stack, std3, 3, 3).is_restricted);
  const auto s = restricted_color(stack, std3, 3, 3, ColorMode::apex);
  CHECK(is_proper(stack, s.coloring));
  CHECK(s.colors_used <= 6);
  const auto d = restricted_color(stack, std3, 3, 3, ColorMode::degree);
  CHECK(is_proper(stack, d.coloring));
  CHECK(d.colors_used <= 7);

  CHECK(trianglefree_palette(2) == 15);
  CHECK(trianglefree_palette(1) == 14);
  gen::Rng rng(42);
  const auto inst = gen::random_restricted(rng, 2, 2, 5, 8, 12, true);
  REQUIRE(is_triangle_free(inst.graph));
  const auto tf = restricted_color(inst.graph, inst.td, 2, 2, ColorMode::trianglefree);
  CHECK(is_proper(inst.graph, tf.coloring));
  CHECK(tf.colors_used <= 15);
  CHECK(tf.worst_margin >= 0);

  CHECK_THROWS_AS(restricted_color(stack, std3, 3, 3, ColorMode::trianglefree), PreconditionError);
  CHECK_THROWS_AS(restricted_color(named::complete(5), single_bag(named::complete(5)), 1, 1, ColorMode::apex),
                  PreconditionError);
  CHECK(parse_color_mode("degree") == ColorMode::degree);
  CHECK_THROWS(parse_color_mode("rainbow"));
}

TEST_CASE("property: restricted colourings stay proper and within budget") {
  gen::Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const int t = gen::uniform(rng, 1, 4), a = gen::uniform(rng, 1, 3);
    const bool tf = trial % 2 == 0;
    const auto inst = gen::random_restricted(rng, t, a, gen::uniform(rng, 1, 5), 7, 11, tf);
    REQUIRE(is_restricted(inst.graph, inst.td, t, a).is_restricted);
    const auto ap = restricted_color(inst.graph, inst.td, t, a, ColorMode::apex);
    CHECK(is_proper(inst.graph, ap.coloring));
    CHECK(ap.colors_used <= t + 3);
    const auto dg = restricted_color(inst.graph, inst.td, t, a, ColorMode::degree);
    CHECK(is_proper(inst.graph, dg.coloring));
    CHECK(dg.colors_used <= a + 4);
    if (tf) {
      const auto r = restricted_color(inst.graph, inst.td, t, a, ColorMode::trianglefree);
      CHECK(is_proper(inst.graph, r.coloring));
      CHECK(r.colors_used <= trianglefree_palette(t));
      CHECK(r.worst_margin >= 0);
    }
  }
}

TEST_CASE("degenerate order of planar graphs") {
  gen::Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = gen::random_planar(rng, gen::uniform(rng, 1, 14), 0.9);
    const auto order = degenerate_order(g);
    std::vector<int> pos(g.order());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    for (Vertex v = 0; v < g.order(); ++v) {
      int earlier = 0;
      for (Vertex w : g.neighbors(v)) earlier += pos[w] < pos[v] ? 1 : 0;
      CHECK(earlier <= 5);
    }
  }
}

namespace {

// Path 0-1-2-3-4-5, one node per edge. Node v draws vertex v+1 (node 0 draws
// 0 and 1) and keeps vertex v as inner apex.
StructuredDecomposition path_chain() {
  StructuredDecomposition sd;
  sd.td = chain({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  sd.t = 2;
  sd.a_h = 1;
  sd.nodes.resize(5);
  sd.nodes[0].surface = {0, 1};
  for (int v = 1; v < 5; ++v) {
    sd.nodes[v].surface = {v + 1};
    sd.nodes[v].apex = {v};
    sd.nodes[v].inner_apex = {v};
  }
  return sd;
}

}  // namespace

TEST_CASE("normalize_skippable without skippable edges keeps the tree") {
  const auto sd = path_chain();
  const auto r = normalize_skippable(named::path(6), sd, iota(6));
  CHECK(r.skippable.empty());
  CHECK(r.new_parent == std::vector<int>{-1, 0, 1, 2, 3});
  CHECK(r.td.bags == sd.td.bags);
  CHECK(r.root_fallbacks == 0);
}

TEST_CASE("normalize_skippable re-parents a chain of skippable edges") {
  const auto sd = path_chain();
  // Without 2 and 3 the edges 1-2 and 2-3 of the tree miss their parent's
  // surface; nodes 2 and 3 hang from node 0, node 4 stays below node 3.
  const std::vector<Vertex> core{0, 1, 4, 5};
  const auto r = normalize_skippable(named::path(6), sd, core);
  CHECK(r.skippable == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(r.new_parent == std::vector<int>{-1, 0, 0, 0, 3});
  CHECK(r.td.bags == std::vector<std::vector<Vertex>>{{0, 1}, {1}, {}, {4}, {4, 5}});
  // Valid on g[C]: edges 0-1 and 4-5, both traces connected.
  const auto sub = induced_subgraph(named::path(6), core);
  auto bags = r.td.bags;
  for (auto& b : bags)
    for (Vertex& x : b) x = static_cast<Vertex>(std::find(core.begin(), core.end(), x) - core.begin());
  CHECK(is_valid_td(sub.graph, make_decomposition(r.new_parent, bags)));
}

TEST_CASE("normalize_skippable rejects adhesions outside the surface and inner apex") {
  StructuredDecomposition sd;
  sd.td = make_decomposition({-1, 0}, {{0, 1}, {0, 1, 2}});
  sd.t = 2;
  sd.a_h = 2;
  sd.nodes.resize(2);
  sd.nodes[0].surface = {0};
  sd.nodes[0].apex = {1};
  sd.nodes[1].surface = {2};
  sd.nodes[1].apex = {0, 1};
  CHECK_THROWS_AS(normalize_skippable(named::path(3), sd, iota(3)), PreconditionError);
  CHECK_FALSE(structured_violations(named::path(3), sd).empty());
}

TEST_CASE("split_low_high on a sphere without apices") {
  StructuredDecomposition sd;
  const Graph k4 = named::complete(4);
  sd.td = single_bag(k4);
  sd.t = 1;
  sd.a_h = 0;
  StructuredNode node;
  node.surface = iota(4);
  node.embedding = RotationEmbedding::orientable(k4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}});
  sd.nodes = {node};
  REQUIRE(structured_violations(k4, sd).empty());
  const auto r = split_low_high(k4, sd);
  CHECK(r.low.empty());
  CHECK(r.core == iota(4));
  CHECK(r.restricted.is_restricted);
  CHECK(is_valid_td(r.core_graph, r.core_td));
}

TEST_CASE("split_low_high removes a universal apex") {
  const Graph w = named::wheel(5);
  StructuredDecomposition sd;
  sd.td = single_bag(w);
  sd.t = 2;
  sd.a_h = 1;
  StructuredNode node;
  node.apex = {5};
  node.inner_apex = {5};
  node.surface = iota(5);
  node.embedding = RotationEmbedding::orientable(named::cycle(5), {{4, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 0}});
  sd.nodes = {node};
  REQUIRE(structured_violations(w, sd).empty());
  const auto r = split_low_high(w, sd);
  CHECK(r.low == std::vector<Vertex>{5});
  CHECK(r.core == iota(5));
  CHECK(is_planar(r.core_graph));
  CHECK(r.restricted.is_restricted);
  CHECK(is_restricted(r.core_graph, r.core_td, 2, 2).is_restricted);
  CHECK(r.low_within_bound);
}

TEST_CASE("split_low_high on a toroidal grid with a vortex") {
  const auto inst = removal_instance_from_json(read_json_file(support::fixture("torus-vortex.json")));
  const auto& vx = inst.vortices.at(0);
  std::vector<Edge> edges = inst.g0.graph.edges();
  for (const Edge& e : vx.graph.edges()) edges.push_back(e);
  const Graph g(vx.graph.order(), edges);

  StructuredDecomposition sd;
  sd.td = single_bag(g);
  sd.t = 1;
  sd.a_h = inst.a;
  StructuredNode node;
  node.surface = iota(inst.g0.graph.order());
  node.embedding = inst.g0;
  StructuredVortex sv;
  sv.boundary = vx.boundary;
  sv.path_bags = vx.path_bags;
  sv.face = vx.face;
  node.vortices = {sv};
  sd.nodes = {node};
  REQUIRE(structured_violations(g, sd).empty());

  const auto r = split_low_high(g, sd);
  const auto lemma = lemma_remove(inst.g0, inst.vortices, inst.a);
  const std::set<Vertex> low(r.low.begin(), r.low.end());
  for (Vertex x : lemma.removed) CHECK(low.count(x) == 1);
  for (Vertex x : vortex_vertices(sv)) CHECK(low.count(x) == 1);
  CHECK(is_planar(r.core_graph));
  CHECK(r.restricted.is_restricted);
  CHECK(r.nodes.at(0).genus == 2);
  CHECK(r.low_bound == 26 * 2 + 9 + 2);
  CHECK(r.low_within_bound);
  CHECK(r.low.size() + r.core.size() == static_cast<std::size_t>(g.order()));
}
