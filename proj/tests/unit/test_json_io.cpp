#include <doctest.h>

#include "minorcolor/errors.hpp"
#include "minorcolor/fractional.hpp"
#include "minorcolor/generators.hpp"
#include "minorcolor/json_io.hpp"
#include "support.hpp"

using namespace minorcolor;

TEST_CASE("graph and ordered graph round trips") {
  gen::Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = gen::random_graph(rng, gen::uniform(rng, 0, 9), 0.5);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    const OrderedGraph h(g, gen::random_permutation(rng, g.order()));
    const auto back = ordered_graph_from_json(ordered_graph_to_json(h));
    CHECK(back.graph == h.graph);
    CHECK(back.order == h.order);
  }
  const auto p3 = read_ordered_graph_file(support::fixture("p3.json"));
  CHECK(p3.graph == named::path(3));
  CHECK(p3.order == std::vector<Vertex>{1, 0, 2});
  CHECK(read_graph_file(support::fixture("k4.col")) == named::complete(4));
  CHECK_THROWS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 2]]})")));
}

TEST_CASE("tree decomposition round trip") {
  gen::Rng rng(72);
  const auto inst = gen::random_partial_ktree(rng, 9, 3);
  const auto back = td_from_json(td_to_json(inst.td));
  CHECK(back.parent == inst.td.parent);
  CHECK(back.bags == inst.td.bags);
  CHECK(back.root == inst.td.root);
  // A null parent also marks the root.
  const auto j = json::parse(R"({"nodes": [{"id": 1, "bag": [1, 0], "parent": 0}, {"id": 0, "bag": [0]}]})");
  const auto td = td_from_json(j);
  CHECK(td.root == 0);
  CHECK(td.bags[1] == std::vector<Vertex>{0, 1});
  CHECK_THROWS_AS(td_from_json(json::parse(R"({"nodes": [{"id": 0, "bag": []}, {"id": 0, "bag": []}]})")),
                  PreconditionError);
}

TEST_CASE("embedding round trip keeps signatures") {
  const auto k6 = removal_instance_from_json(read_json_file(support::fixture("k6-projective.json"))).g0;
  const auto back = embedding_from_json(embedding_to_json(k6));
  CHECK(back.graph == k6.graph);
  CHECK(back.rotation == k6.rotation);
  CHECK(back.signature == k6.signature);
}

TEST_CASE("structured decomposition round trip") {
  StructuredDecomposition sd;
  sd.td = make_decomposition({-1}, {{0, 1, 2, 3, 4, 5}});
  sd.t = 2;
  sd.a_h = 1;
  StructuredNode node;
  node.apex = {5};
  node.inner_apex = {5};
  node.surface = {0, 1, 2, 3, 4};
  node.embedding = RotationEmbedding::orientable(named::cycle(5), {{4, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 0}});
  sd.nodes = {node};
  const auto back = structured_from_json(structured_to_json(sd));
  CHECK(back.t == 2);
  CHECK(back.a_h == 1);
  REQUIRE(back.nodes.size() == 1);
  CHECK(back.nodes[0].apex == node.apex);
  CHECK(back.nodes[0].surface == node.surface);
  CHECK(back.nodes[0].embedding.graph == node.embedding.graph);
  CHECK(structured_violations(named::wheel(5), back).empty());
}

TEST_CASE("rationals and fractional results") {
  CHECK(rational_to_json(Rational(5, 2)) == "5/2");
  CHECK(rational_to_json(Rational(3)) == "3");
  const auto j = fractional_to_json(fractional_chromatic(named::cycle(5)));
  CHECK(j.at("value") == "5/2");
  CHECK(j.at("status") == "yes");
}
