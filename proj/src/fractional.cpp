#include "minorcolor/fractional.hpp"

#include <algorithm>
#include <stdexcept>

#include "bitset.hpp"
#include "minorcolor/exact_coloring.hpp"
#include "minorcolor/oracles.hpp"

namespace minorcolor {

namespace {

using detail::Bitset;

// Bron-Kerbosch with pivoting on the complement: cliques of the complement
// are independent sets of g.
class MisEnumerator {
 public:
  MisEnumerator(const Graph& g, std::vector<std::vector<Vertex>>& out, std::uint64_t limit)
      : n_(g.order()), out_(out), limit_(limit) {
    const auto adj = detail::adjacency_bitsets(g);
    non_adj_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      Bitset b(n_);
      for (Vertex w = 0; w < n_; ++w)
        if (w != v && !adj[v].test(w)) b.set(w);
      non_adj_.push_back(std::move(b));
    }
  }

  bool run() {
    Bitset p(n_), x(n_);
    for (Vertex v = 0; v < n_; ++v) p.set(v);
    std::vector<Vertex> r;
    expand(r, p, x);
    return !stopped_;
  }

 private:
  void expand(std::vector<Vertex>& r, Bitset p, Bitset x) {
    if (stopped_) return;
    if (!p.any() && !x.any()) {
      if (limit_ != 0 && out_.size() >= limit_) {
        stopped_ = true;
        return;
      }
      auto set = r;
      std::sort(set.begin(), set.end());
      out_.push_back(std::move(set));
      return;
    }
    // Pivot maximising |P cap N(u)|.
    int pivot = -1, best = -1;
    Bitset px = p;
    px |= x;
    for (int u = px.first(); u >= 0; u = px.next(u)) {
      Bitset t = p;
      t &= non_adj_[u];
      const int c = t.count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    Bitset cand = p;
    cand.subtract(non_adj_[pivot]);
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      Bitset p2 = p, x2 = x;
      p2 &= non_adj_[v];
      x2 &= non_adj_[v];
      r.push_back(v);
      expand(r, p2, x2);
      r.pop_back();
      if (stopped_) return;
      p.reset(v);
      x.set(v);
    }
  }

  int n_;
  std::vector<std::vector<Vertex>>& out_;
  std::uint64_t limit_;
  std::vector<Bitset> non_adj_;
  bool stopped_ = false;
};

// Tucker tableau for  max c.x  s.t.  A x <= b, x >= 0 with b >= 0, so the
// all-slack basis is feasible and no phase 1 is needed. Labels 0..n-1 are
// structural columns, n..n+m-1 slacks of the rows.
class Simplex {
 public:
  Simplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), m_(static_cast<int>(b_.size())),
        n_(static_cast<int>(c_.size())), col_label_(n_), row_label_(m_) {
    for (int j = 0; j < n_; ++j) col_label_[j] = j;
    for (int i = 0; i < m_; ++i) row_label_[i] = n_ + i;
  }

  void solve() {
    while (true) {
      int s = -1;
      for (int j = 0; j < n_; ++j)
        if (sgn(c_[j]) > 0 && (s < 0 || col_label_[j] < col_label_[s])) s = j;
      if (s < 0) return;
      int r = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (sgn(a_[i][s]) <= 0) continue;
        Rational ratio = b_[i] / a_[i][s];
        if (r < 0 || ratio < best || (ratio == best && row_label_[i] < row_label_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r < 0) throw std::logic_error("fractional LP reported unbounded");
      pivot(r, s);
      ++pivots_;
    }
  }

  Rational objective() const { return z_; }
  // Primal value of structural variable j.
  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_, Rational(0));
    for (int i = 0; i < m_; ++i)
      if (row_label_[i] < n_) x[row_label_[i]] = b_[i];
    return x;
  }
  // Dual value of every row.
  std::vector<Rational> dual() const {
    std::vector<Rational> y(m_, Rational(0));
    for (int j = 0; j < n_; ++j)
      if (col_label_[j] >= n_) y[col_label_[j] - n_] = -c_[j];
    return y;
  }
  std::uint64_t pivots() const { return pivots_; }

 private:
  void pivot(int r, int s) {
    const Rational p = a_[r][s];
    for (int j = 0; j < n_; ++j)
      if (j != s) a_[r][j] /= p;
    b_[r] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r || sgn(a_[i][s]) == 0) continue;
      const Rational f = a_[i][s];
      for (int j = 0; j < n_; ++j)
        if (j != s && sgn(a_[r][j]) != 0) a_[i][j] -= f * a_[r][j];
      b_[i] -= f * b_[r];
      a_[i][s] = -f / p;
    }
    if (sgn(c_[s]) != 0) {
      const Rational f = c_[s];
      for (int j = 0; j < n_; ++j)
        if (j != s && sgn(a_[r][j]) != 0) c_[j] -= f * a_[r][j];
      z_ += f * b_[r];
      c_[s] = -f / p;
    }
    a_[r][s] = 1 / p;
    std::swap(row_label_[r], col_label_[s]);
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<Rational> c_;
  int m_, n_;
  std::vector<int> col_label_;
  std::vector<int> row_label_;
  Rational z_ = 0;
  std::uint64_t pivots_ = 0;
};

}  // namespace

bool maximal_independent_sets(const Graph& g, std::vector<std::vector<Vertex>>& out, std::uint64_t limit) {
  out.clear();
  if (g.order() == 0) return true;
  MisEnumerator e(g, out, limit);
  return e.run();
}

FractionalResult fractional_chromatic(const Graph& g, SearchBudget budget) {
  FractionalResult r;
  const int n = g.order();
  if (n == 0) {
    r.status = Verdict::yes;
    return r;
  }
  std::vector<std::vector<Vertex>> sets;
  const bool complete = maximal_independent_sets(g, sets, budget.node_limit);
  r.independent_sets = sets.size();
  if (!complete) {
    const Rational by_alpha(n, independence_number(g));
    r.lower = std::max(Rational(clique_number(g)), by_alpha);
    r.lower.canonicalize();
    r.upper = dsatur_coloring(g).distinct_colors();
    return r;
  }

  const int m = static_cast<int>(sets.size());
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < m; ++i)
    for (Vertex v : sets[i]) a[i][v] = 1;
  Simplex lp(std::move(a), std::vector<Rational>(m, Rational(1)), std::vector<Rational>(n, Rational(1)));
  lp.solve();
  r.pivots = lp.pivots();

  r.clique.weights = lp.primal();
  const auto dual = lp.dual();
  for (int i = 0; i < m; ++i) {
    if (sgn(dual[i]) == 0) continue;
    r.coloring.sets.push_back(sets[i]);
    r.coloring.weights.push_back(dual[i]);
  }
  r.value = lp.objective();
  r.value.canonicalize();

  // Independent certificate checks: cover, packing, equal totals.
  if (!is_valid_fractional_coloring(g, r.coloring)) throw std::logic_error("fractional LP dual is not a cover");
  for (const auto& w : r.clique.weights)
    if (sgn(w) < 0) throw std::logic_error("fractional clique has a negative weight");
  for (const auto& set : sets) {
    Rational load = 0;
    for (Vertex v : set) load += r.clique.weights[v];
    if (load > 1) throw std::logic_error("fractional clique overloads an independent set");
  }
  if (r.coloring.total() != r.value || r.clique.total() != r.value) {
    throw std::logic_error("fractional LP certificates do not match the optimum");
  }
  r.lower = r.value;
  r.upper = r.value;
  r.status = Verdict::yes;
  return r;
}

}  // namespace minorcolor
