#pragma once

#include <cstdint>
#include <vector>

#include "minorcolor/coloring.hpp"
#include "minorcolor/errors.hpp"
#include "minorcolor/graph.hpp"

namespace minorcolor {

/// Maximal independent sets, each sorted, in Bron-Kerbosch (pivoting) order.
/// Returns false (and a partial list) once more than `limit` sets were found;
/// limit 0 means unlimited.
bool maximal_independent_sets(const Graph& g, std::vector<std::vector<Vertex>>& out, std::uint64_t limit = 0);

/// Exact fractional chromatic number.
///
/// Solves  max sum y_v  s.t.  sum_{v in I} y_v <= 1  for every maximal
/// independent set I, y >= 0, by a simplex over rationals with Bland's rule.
/// The optimal dual gives the fractional colouring. Both certificates are
/// re-checked before returning. When the set enumeration exceeds the budget
/// the status is inconclusive and [lower, upper] is the bracket
/// max(omega, n/alpha) .. greedy chromatic bound.
struct FractionalResult {
  Verdict status = Verdict::inconclusive;
  Rational value;
  Rational lower;
  Rational upper;
  FractionalColoring coloring;
  FractionalClique clique;
  std::uint64_t independent_sets = 0;
  std::uint64_t pivots = 0;
};

FractionalResult fractional_chromatic(const Graph& g, SearchBudget budget = SearchBudget::nodes(200'000));

}  // namespace minorcolor
