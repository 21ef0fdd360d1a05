#include "minorcolor/planarity.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

namespace minorcolor {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.order());
  int index = 0;
  for (const Edge& e : g.edges()) {
    auto [edge, ok] = boost::add_edge(e.u, e.v, bg);
    (void)ok;
    boost::put(boost::edge_index, bg, edge, index++);
  }
  return bg;
}

bool boost_planar(const Graph& g) {
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Boost may hand back dangling paths along with the subdivision.
void prune_pendant(int n, std::vector<Edge>& edges) {
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) ++deg[e.u], ++deg[e.v];
    const auto end = std::remove_if(edges.begin(), edges.end(), [&](const Edge& e) { return deg[e.u] == 1 || deg[e.v] == 1; });
    if (end != edges.end()) {
      edges.erase(end, edges.end());
      changed = true;
    }
  }
}

PlanarityResult run_boost(const Graph& g) {
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> embedding_storage(g.order());
  auto embedding = boost::make_iterator_property_map(embedding_storage.begin(),
                                                     boost::get(boost::vertex_index, bg));
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  PlanarityResult result;
  result.planar = planar;
  if (planar) {
    std::vector<std::vector<Vertex>> rotation(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      for (const BoostEdge& e : embedding_storage[v]) {
        const auto s = static_cast<Vertex>(boost::source(e, bg));
        const auto t = static_cast<Vertex>(boost::target(e, bg));
        rotation[v].push_back(s == v ? t : s);
      }
    }
    result.embedding = RotationEmbedding::orientable(g, std::move(rotation));
  } else {
    for (const BoostEdge& e : kuratowski) {
      result.kuratowski_edges.emplace_back(static_cast<Vertex>(boost::source(e, bg)),
                                           static_cast<Vertex>(boost::target(e, bg)));
    }
    std::sort(result.kuratowski_edges.begin(), result.kuratowski_edges.end());
    prune_pendant(g.order(), result.kuratowski_edges);
    result.kind = classify_subdivision(g.order(), result.kuratowski_edges);
    if (result.kind == KuratowskiKind::none) {
      // Shrink to an edge-minimal non-planar subgraph, which is a subdivision.
      auto edges = result.kuratowski_edges;
      for (std::size_t i = 0; i < edges.size();) {
        auto trial = edges;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (!boost_planar(Graph(g.order(), trial))) {
          edges = std::move(trial);
        } else {
          ++i;
        }
      }
      result.kuratowski_edges = std::move(edges);
      result.kind = classify_subdivision(g.order(), result.kuratowski_edges);
    }
  }
  return result;
}

}  // namespace

PlanarityResult test_planarity(const Graph& g) { return run_boost(g); }

bool is_planar(const Graph& g) {
  if (g.order() >= 3 && g.size() > static_cast<std::size_t>(3 * g.order() - 6)) return false;
  return run_boost(g).planar;
}

KuratowskiKind classify_subdivision(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < n; ++v) {
    if (adj[v].empty()) continue;
    if (adj[v].size() == 1) return KuratowskiKind::none;
    if (adj[v].size() >= 3) branch.push_back(v);
  }
  std::map<Vertex, int> branch_index;
  for (std::size_t i = 0; i < branch.size(); ++i) branch_index[branch[i]] = static_cast<int>(i);
  // Follow each thread of degree-2 vertices from a branch vertex.
  std::vector<Edge> reduced;
  std::size_t walked = 0;
  for (Vertex b : branch) {
    for (Vertex start : adj[b]) {
      Vertex prev = b, cur = start;
      ++walked;
      while (adj[cur].size() == 2) {
        const Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++walked;
      }
      if (!branch_index.count(cur) || cur == b) return KuratowskiKind::none;
      if (b < cur) reduced.emplace_back(branch_index[b], branch_index[cur]);
    }
  }
  std::sort(reduced.begin(), reduced.end());
  if (std::adjacent_find(reduced.begin(), reduced.end()) != reduced.end()) return KuratowskiKind::none;
  // Threads are walked from both ends; anything left over is a stray cycle.
  if (walked != 2 * edges.size()) return KuratowskiKind::none;
  Graph core(static_cast<int>(branch.size()), reduced);
  if (branch.size() == 5 && core.size() == 10) {
    for (Vertex v = 0; v < 5; ++v)
      if (core.degree(v) != 4) return KuratowskiKind::none;
    return KuratowskiKind::k5;
  }
  if (branch.size() == 6 && core.size() == 9) {
    // Bipartite with both sides of size 3 and all degrees 3.
    std::vector<int> side(6, -1);
    side[0] = 0;
    std::vector<Vertex> stack{0};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : core.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return KuratowskiKind::none;
        }
      }
    }
    if (std::count(side.begin(), side.end(), 0) != 3) return KuratowskiKind::none;
    for (Vertex v = 0; v < 6; ++v)
      if (core.degree(v) != 3) return KuratowskiKind::none;
    return KuratowskiKind::k33;
  }
  return KuratowskiKind::none;
}

}  // namespace minorcolor
