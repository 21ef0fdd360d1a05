#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "minorcolor/graph.hpp"

namespace minorcolor {

using Rational = mpq_class;

/// Vertex -> colour (non-negative). Properness is a property of the pair
/// (graph, colouring) and is always checked, never assumed.
struct Coloring {
  std::vector<int> colors;

  int distinct_colors() const;
  int max_color() const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

bool is_proper(const Graph& g, const Coloring& c);
/// Renames colours to 0,1,... in order of first appearance.
Coloring canonical_colors(const Coloring& c);
/// Throws std::logic_error naming `producer` if c is not a proper colouring
/// of g. Used on every colouring an algorithm is about to return.
void ensure_proper(const Graph& g, const Coloring& c, const std::string& producer);

/// (a:b)-colouring: each vertex gets a b-subset of {1..a}, adjacent
/// vertices get disjoint subsets.
struct SetColoring {
  int a = 0;
  int b = 0;
  std::vector<std::vector<int>> sets;
};

bool is_valid_set_coloring(const Graph& g, const SetColoring& s);

/// Weighted independent sets covering every vertex with total weight >= 1.
struct FractionalColoring {
  std::vector<std::vector<Vertex>> sets;
  std::vector<Rational> weights;

  Rational total() const;
};

/// Each set independent, weights non-negative, per-vertex coverage >= 1.
bool is_valid_fractional_coloring(const Graph& g, const FractionalColoring& f);

/// Vertex weights with total weight <= 1 on every independent set; its
/// total is a lower bound on the fractional chromatic number.
struct FractionalClique {
  std::vector<Rational> weights;
  Rational total() const;
};

std::string to_string(const Rational& q);

}  // namespace minorcolor
