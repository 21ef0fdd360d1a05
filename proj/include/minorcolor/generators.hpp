#pragma once

#include <random>
#include <vector>

#include "minorcolor/graph.hpp"
#include "minorcolor/tree_decomposition.hpp"

namespace minorcolor::gen {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);  // inclusive
bool coin(Rng& rng, double p);

/// G(n, p).
Graph random_graph(Rng& rng, int n, double p);
/// Random permutation of 0..n-1.
std::vector<Vertex> random_permutation(Rng& rng, int n);

/// Random planar graph: pairs in random order, each kept with probability
/// keep while the graph stays planar (and triangle-free if asked).
Graph random_planar(Rng& rng, int n, double keep = 0.7, bool triangle_free = false);

/// Random partial k-tree on n vertices with a decomposition of width <= k.
struct GraphWithTd {
  Graph graph;
  RootedTreeDecomposition td;
};
GraphWithTd random_partial_ktree(Rng& rng, int n, int k, double keep = 0.7);

/// Random (t,a)-restricted instance: planar down-parts of at most
/// `max_down` vertices, adhesions of size <= t-1, at most a-1 adhesion
/// neighbours per vertex, bags of at most `max_bag` vertices.
GraphWithTd random_restricted(Rng& rng, int t, int a, int nodes, int max_down, int max_bag, bool triangle_free);

}  // namespace minorcolor::gen
