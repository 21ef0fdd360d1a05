#include <doctest.h>

#include <set>

#include "minorcolor/constructions.hpp"
#include "minorcolor/errors.hpp"
#include "minorcolor/exact_coloring.hpp"
#include "minorcolor/oracles.hpp"
#include "support.hpp"

using namespace minorcolor;

namespace {

// Edge set of T(g, h) built straight from the definition: walk the tree of
// copies, remember the base vertex chosen at every level on the way down.
std::set<Edge> product_by_definition(const Graph& g, const OrderedGraph& h) {
  const int n = g.order(), k = h.order_size();
  std::set<Edge> edges;
  struct Frame {
    int node;
    std::vector<Vertex> path;  // product ids of the chosen vertices, level 1..depth-1
  };
  std::vector<Frame> stack{{0, {}}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const int level = static_cast<int>(f.path.size()) + 1;
    for (const Edge& e : g.edges()) edges.emplace(f.node * n + e.u, f.node * n + e.v);
    for (Vertex v = 0; v < n; ++v) {
      const Vertex z = f.node * n + v;
      for (int i = 1; i < level; ++i)
        if (h.graph.adjacent(h.order[i - 1], h.order[level - 1])) edges.emplace(f.path[i - 1], z);
      if (level < k) {
        auto path = f.path;
        path.push_back(z);
        stack.push_back({f.node * n + v + 1, path});
      }
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("tree product examples") {
  const auto two_isolated = tree_product(named::complete(2), OrderedGraph(named::empty(2)));
  CHECK(two_isolated.product.order() == 6);
  CHECK(two_isolated.product.size() == 3);

  const auto k2k2 = tree_product(named::complete(2), OrderedGraph(named::complete(2)));
  CHECK(k2k2.product.order() == 6);
  CHECK(k2k2.product.size() == 7);
  CHECK(clique_number(k2k2.product) == 3);

  const auto big = tree_product(named::complete(4), complete_multipartite(1, 4));
  CHECK(big.product.order() == 340);
  CHECK(big.node_count() == 85);
}

TEST_CASE("tree product matches the definition and its index maps") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 4);
    const Graph g = support::random_graph(rng, n, 0.5);
    std::vector<Vertex> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const OrderedGraph h(support::random_graph(rng, k, 0.5), order);
    const auto tp = tree_product(g, h);
    const auto expected = product_by_definition(g, h);
    CHECK(std::set<Edge>(tp.product.edges().begin(), tp.product.edges().end()) == expected);
    for (Vertex z = 0; z < tp.product.order(); ++z) {
      const auto pro = tp.progenitors(z);
      REQUIRE(static_cast<int>(pro.size()) == tp.level(z) - 1);
      for (int i = 1; i < tp.level(z); ++i) {
        CHECK(tp.level(pro[i - 1]) == i);
        CHECK(tp.progenitor(z, i) == pro[i - 1]);
        // z sits below the child node of its progenitor.
        int node = tp.node_of(z);
        while (tp.node_depth[node] > i + 1) node = tp.node_parent[node];
        CHECK(node == tp.child_node(tp.node_of(pro[i - 1]), tp.base_of(pro[i - 1])));
      }
    }
  }
}

TEST_CASE("tree product size formula and budget") {
  CHECK(tree_product_size(4, 4) == 340);
  CHECK(tree_product_size(1, 7) == 7);
  CHECK(tree_product_size(3, 1) == 3);
  CHECK(tree_product_size(1000, 40) == UINT64_MAX);
  CHECK_THROWS_AS(tree_product(named::complete(10), complete_multipartite(1, 7), 1000), BudgetExceeded);
  try {
    tree_product(named::complete(10), complete_multipartite(1, 7), 1000);
  } catch (const BudgetExceeded& e) {
    CHECK(e.predicted() == tree_product_size(10, 7));
    CHECK(e.limit() == 1000);
  }
}

TEST_CASE("p-blowup examples") {
  const auto k3x2 = p_blowup(named::complete(3), 2);
  CHECK(k3x2.graph.order() == 6);
  CHECK(k3x2.graph.size() == 12);
  const Graph h0 = named::petersen();
  const auto same = p_blowup(h0, 1);
  CHECK(same.graph == h0);
  CHECK(same.order == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  const auto c5 = p_blowup(named::cycle(5), 2);
  CHECK(c5.graph.order() == 10);
  CHECK(c5.graph.size() == 20);
  CHECK(is_triangle_free(c5.graph));
}

TEST_CASE("strong p-blowup examples") {
  CHECK(strong_p_blowup(named::complete(3), 2) == named::complete(6));
  const Graph three_k2 = strong_p_blowup(named::empty(3), 2);
  CHECK(three_k2.size() == 3);
  CHECK(connected_components(three_k2).size() == 3);
  const Graph c5 = strong_p_blowup(named::cycle(5), 2);
  CHECK(c5.order() == 10);
  CHECK(c5.size() == 25);
  CHECK(chromatic_number(c5).value() == 5);
}

TEST_CASE("complete multipartite examples") {
  CHECK(complete_multipartite(1, 4).graph == named::empty(4));
  const Graph c4 = complete_multipartite(2, 2).graph;
  CHECK(c4.size() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  CHECK(is_connected(c4));
  const Graph k34 = complete_multipartite(3, 4).graph;
  CHECK(k34.order() == 12);
  CHECK(k34.size() == 48);
  CHECK(clique_number(k34) == 3);
}

TEST_CASE("universal vertices") {
  CHECK(add_universal(named::cycle(5), 0) == named::cycle(5));
  const Graph w5 = add_universal(named::cycle(5), 1);
  CHECK(w5 == named::wheel(5));
  CHECK(chromatic_number(w5).value() == 4);
  CHECK(add_universal(named::complete(3), 2) == named::complete(5));
}

TEST_CASE("Groetzsch graph") {
  const Graph g = grotzsch_graph();
  CHECK(g.order() == 11);
  CHECK(g.size() == 20);
  CHECK(is_triangle_free(g));
  CHECK(chromatic_number(g).value() == 4);
  CHECK(support::brute_chromatic(g) == 4);
  CHECK(g.adjacent(kGadgetEdge.u, kGadgetEdge.v));
}

TEST_CASE("gadget R forces equal colours on u and v") {
  const Graph r0 = grotzsch_graph();
  std::vector<Edge> edges;
  for (const Edge& e : r0.edges())
    if (e != kGadgetEdge) edges.push_back(e);
  const Graph r(11, edges);
  // All 3^11 assignments.
  int proper = 0;
  std::vector<int> col(11);
  for (int code = 0; code < 177147; ++code) {
    int x = code;
    for (int v = 0; v < 11; ++v) {
      col[v] = x % 3;
      x /= 3;
    }
    bool ok = true;
    for (const Edge& e : r.edges()) ok = ok && col[e.u] != col[e.v];
    if (!ok) continue;
    ++proper;
    CHECK(col[kGadgetEdge.u] == col[kGadgetEdge.v]);
  }
  CHECK(proper > 0);
  CHECK(static_cast<std::size_t>(proper) == all_colorings(r, 3).size());
}

TEST_CASE("gadget expansion examples") {
  const auto k2 = gadget_expand(named::complete(2));
  CHECK(k2.graph.order() == 12);
  const auto k3 = gadget_expand(named::complete(3));
  CHECK(k3.graph.order() == 33);
  CHECK(chromatic_number(k3.graph).value() == 3);
  // |V(G1)| + 10 |E(G1)| = 4 + 60.
  const auto k4 = gadget_expand(named::complete(4));
  CHECK(k4.graph.order() == 64);
  CHECK(try_k_colorable(k4.graph, 3).verdict == Verdict::no);
  CHECK(is_triangle_free(k4.graph));
  const Graph base = named::complete(4);
  for (std::size_t e = 0; e < k4.gadget.size(); ++e) {
    const Edge& xy = base.edges()[e];
    CHECK(k4.gadget[e][0] == xy.u);
    CHECK(k4.graph.adjacent(k4.gadget[e][kGadgetEdge.v], xy.v));
  }
}
