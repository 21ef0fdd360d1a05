#pragma once

#include <string>
#include <vector>

#include "minorcolor/coloring.hpp"
#include "minorcolor/graph.hpp"
#include "minorcolor/tree_decomposition.hpp"

namespace minorcolor {

struct RestrictednessViolation {
  int node = 0;
  std::string reason;
};

struct RestrictednessReport {
  bool is_restricted = true;
  std::vector<RestrictednessViolation> violations;
};

/// Per node v: the torso expansion induced on down(v) is planar,
/// |up(v)| <= t-1, and each vertex of down(v) has at most a-1 neighbours of
/// g in up(v). Throws PreconditionError if td is not a decomposition of g.
RestrictednessReport is_restricted(const Graph& g, const RootedTreeDecomposition& td, int t, int a);

enum class ColorMode { apex, degree, trianglefree };

const char* to_string(ColorMode m);
ColorMode parse_color_mode(const std::string& s);

struct RestrictedColoring {
  Coloring coloring;
  ColorMode mode = ColorMode::apex;
  int palette = 0;        // colours available: t+3, a+4 or ceil((13t+172)/14)
  int colors_used = 0;
  /// trianglefree only: min over all audited independent sets I of
  /// (palette - 6) - #colours on I. Never negative on success.
  int worst_margin = 0;
  long long star_audits = 0;
};

/// ceil((13t + 172) / 14).
int trianglefree_palette(int t);

/// Colours g top-down along td.
///
/// apex:         4 colours of {0..t+2} missing from up(v), exact 4-colouring
///               of g[down(v)].
/// degree:       lists {0..a+3} minus colours on g-neighbours in up(v),
///               exact list colouring of g[down(v)].
/// trianglefree: greedy along a 5-degenerate order of the torso on down(v),
///               avoiding neighbour colours and forbidden colours, with the
///               independent-set colour invariant audited after every step.
///
/// Throws PreconditionError when td is not (t,a)-restricted or (trianglefree)
/// g has a triangle, LemmaViolation when the search fails on a planar piece
/// or no admissible colour exists.
RestrictedColoring restricted_color(const Graph& g, const RootedTreeDecomposition& td, int t, int a, ColorMode mode);

/// Removal order by repeated minimum degree (ties by lowest id), reversed:
/// every vertex is preceded by at most degeneracy-many neighbours.
std::vector<Vertex> degenerate_order(const Graph& g);

}  // namespace minorcolor
