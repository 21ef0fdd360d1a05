#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "minorcolor/coloring.hpp"
#include "minorcolor/constructions.hpp"
#include "minorcolor/errors.hpp"

namespace minorcolor {

/// Colouring of T(G, p-blowup of h0) with c * chi(G) colours: level i uses
/// palette phi(u_i / p) of size chi(G), and inside it the G-colour of the
/// base vertex.
///
/// tp must be built over p_blowup(h0, p) (checked on sizes). h0_coloring
/// defaults to an optimal colouring of h0; PreconditionError when it is
/// improper or uses more than c colours.
Coloring product_color_upper(const TreeProduct& tp, const Graph& h0, int p, int c,
                             const std::optional<Coloring>& h0_coloring = std::nullopt);

/// Raised when a copy G_x shows fewer colours than needed to avoid the
/// progenitor window. Only possible when chi(G) < p.
class ExtractionStuck : public std::runtime_error {
 public:
  ExtractionStuck(const std::string& what, int level) : std::runtime_error(what), level_(level) {}
  int level() const { return level_; }

 private:
  int level_;
};

/// Walks from the root; at level i picks the lowest base vertex v of the
/// current copy whose colour avoids the chosen vertices at levels
/// i-p+1 .. i-1, sets psi(u_i) = phi(v) and descends to theta(v).
/// The result colours the vertices of H (ids of p_blowup(h0, p)).
Coloring extract_blowup_witness(const TreeProduct& tp, const Coloring& phi, const Graph& h0, int p);

struct GapReport {
  int k0 = 0;
  int chi_g0 = 0;
  int product_vertices = 0;
  int upper_colors = 0;        // colours used by product_color_upper
  Verdict exact_status = Verdict::inconclusive;
  int chi_lower = 0;           // certified bounds on chi(product)
  int chi_upper = 0;
  int low_threshold = 0;       // 3 k0
  int high_threshold = 0;      // 4 k0
  /// yes: the branch predicted by chi(g0) is certified; no: contradicted;
  /// inconclusive: the exact search ran out of budget.
  Verdict dichotomy = Verdict::inconclusive;
};

/// Builds T(g0, K_{k0 x 4}) and compares its chromatic number against 3k0
/// (g0 3-colourable) or 4k0 (otherwise). Throws PreconditionError for
/// non-planar g0 and BudgetExceeded when the product is too large.
GapReport reduction_gap_check(const Graph& g0, int k0, std::uint64_t size_limit = 1'000'000,
                              SearchBudget budget = SearchBudget::nodes(50'000'000));

}  // namespace minorcolor
