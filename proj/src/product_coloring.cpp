#include "minorcolor/product_coloring.hpp"

#include <algorithm>
#include <string>

#include "minorcolor/exact_coloring.hpp"
#include "minorcolor/planarity.hpp"

namespace minorcolor {

namespace {

void check_blowup_shape(const TreeProduct& tp, const Graph& h0, int p) {
  if (p < 1) throw PreconditionError("blowup factor p must be >= 1");
  if (tp.k != p * h0.order()) {
    throw PreconditionError("tree product has " + std::to_string(tp.k) + " levels, expected p*|V(h0)| = " +
                            std::to_string(p * h0.order()));
  }
}

}  // namespace

Coloring product_color_upper(const TreeProduct& tp, const Graph& h0, int p, int c,
                             const std::optional<Coloring>& h0_coloring) {
  check_blowup_shape(tp, h0, p);
  Coloring phi_h = h0_coloring ? *h0_coloring : chromatic_number(h0).coloring;
  if (!is_proper(h0, phi_h)) throw PreconditionError("supplied colouring of h0 is not proper");
  phi_h = canonical_colors(phi_h);
  if (phi_h.distinct_colors() > c) {
    throw PreconditionError("colouring of h0 uses " + std::to_string(phi_h.distinct_colors()) + " > c colours");
  }
  const auto g_col = chromatic_number(tp.base);
  const int chi_g = g_col.value();
  const Coloring psi = canonical_colors(g_col.coloring);
  Coloring out;
  out.colors.resize(tp.product.order());
  for (Vertex z = 0; z < tp.product.order(); ++z) {
    const Vertex u = tp.h_order[tp.level(z) - 1] / p;
    out.colors[z] = phi_h.colors[u] * chi_g + psi.colors[tp.base_of(z)];
  }
  ensure_proper(tp.product, out, "product_color_upper");
  return out;
}

Coloring extract_blowup_witness(const TreeProduct& tp, const Coloring& phi, const Graph& h0, int p) {
  check_blowup_shape(tp, h0, p);
  if (!is_proper(tp.product, phi)) throw PreconditionError("phi is not a proper colouring of the product");
  Coloring psi;
  psi.colors.assign(tp.k, -1);
  std::vector<Vertex> chosen;
  int node = 0;
  for (int i = 1; i <= tp.k; ++i) {
    const int from = std::max(1, i - p + 1);
    Vertex pick = -1;
    for (Vertex v = 0; v < tp.n && pick < 0; ++v) {
      const int col = phi.colors[tp.copy_vertex(node, v)];
      bool clash = false;
      for (int j = from; j < i; ++j) clash = clash || phi.colors[chosen[j - 1]] == col;
      if (!clash) pick = v;
    }
    if (pick < 0) {
      throw ExtractionStuck("copy at level " + std::to_string(i) +
                                " has no colour outside its progenitor window (chi(G) < p?)",
                            i);
    }
    const Vertex z = tp.copy_vertex(node, pick);
    chosen.push_back(z);
    psi.colors[tp.h_order[i - 1]] = phi.colors[z];
    if (i < tp.k) node = tp.child_node(node, pick);
  }
  return psi;
}

GapReport reduction_gap_check(const Graph& g0, int k0, std::uint64_t size_limit, SearchBudget budget) {
  if (k0 < 1) throw PreconditionError("k0 must be >= 1");
  if (!is_planar(g0)) throw PreconditionError("reduction_gap_check needs a planar g0");
  GapReport r;
  r.k0 = k0;
  r.low_threshold = 3 * k0;
  r.high_threshold = 4 * k0;
  r.chi_g0 = chromatic_number(g0).value();
  const auto h = complete_multipartite(k0, 4);
  const auto tp = tree_product(g0, h, size_limit);
  r.product_vertices = tp.product.order();
  Coloring identity;
  for (int i = 0; i < k0; ++i) identity.colors.push_back(i);
  const auto upper = product_color_upper(tp, named::complete(k0), 4, k0, identity);
  r.upper_colors = upper.distinct_colors();
  const auto exact = chromatic_number(tp.product, budget);
  r.exact_status = exact.status;
  r.chi_lower = exact.lower;
  r.chi_upper = std::min(exact.upper, r.upper_colors);
  if (r.chi_g0 <= 3) {
    r.dichotomy = r.chi_upper <= r.low_threshold ? Verdict::yes
                  : r.chi_lower > r.low_threshold ? Verdict::no
                                                  : Verdict::inconclusive;
  } else {
    r.dichotomy = r.chi_lower >= r.high_threshold ? Verdict::yes
                  : r.chi_upper < r.high_threshold ? Verdict::no
                                                   : Verdict::inconclusive;
  }
  return r;
}

}  // namespace minorcolor
