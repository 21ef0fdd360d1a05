#include "minorcolor/exact_coloring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "minorcolor/oracles.hpp"

namespace minorcolor {

int ChromaticResult::value() const {
  if (!exact()) {
    throw BudgetExceeded("chromatic number search inconclusive: " + std::to_string(lower) + " <= chi <= " +
                             std::to_string(upper),
                         nodes, nodes);
  }
  return lower;
}

namespace {

// Backtracking colouring with saturation-driven vertex choice. Colour counts
// per neighbour let saturation be maintained incrementally; the uncoloured
// part is split into connected components, each searched on its own.
class Dsatur {
 public:
  Dsatur(const Graph& g, int colors, NodeCounter* counter)
      : g_(g), c_(colors), counter_(counter), color_(g.order(), -1),
        seen_(static_cast<std::size_t>(g.order()) * colors, 0), sat_(g.order(), 0), mark_(g.order(), 0) {}

  void assign(Vertex v, int col) {
    color_[v] = col;
    ++colored_;
    for (Vertex w : g_.neighbors(v))
      if (seen_[idx(w, col)]++ == 0) ++sat_[w];
  }
  void unassign(Vertex v) {
    const int col = color_[v];
    color_[v] = -1;
    --colored_;
    for (Vertex w : g_.neighbors(v))
      if (--seen_[idx(w, col)] == 0) --sat_[w];
  }
  bool available(Vertex v, int col) const { return seen_[idx(v, col)] == 0; }

  Vertex pick() const {
    Vertex best = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] >= 0) continue;
      if (better(v, best)) best = v;
    }
    return best;
  }

  // Exhaustive search; max_used breaks colour symmetry.
  bool search(int max_used) {
    std::vector<Vertex> all;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (color_[v] < 0) all.push_back(v);
    return search_part(all, max_used);
  }

  void greedy() {
    while (colored_ < g_.order()) {
      const Vertex v = pick();
      int col = 0;
      while (col < c_ && !available(v, col)) ++col;
      assign(v, col);
    }
  }

  bool aborted() const { return aborted_; }
  Coloring coloring() const { return Coloring{color_}; }

 private:
  std::size_t idx(Vertex v, int col) const { return static_cast<std::size_t>(v) * c_ + col; }

  bool better(Vertex v, Vertex best) const {
    return best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && g_.degree(v) > g_.degree(best));
  }

  // Uncoloured vertices of `part` split into components of the graph
  // induced on uncoloured vertices, smallest first.
  std::vector<std::vector<Vertex>> components(const std::vector<Vertex>& part) {
    std::vector<std::vector<Vertex>> out;
    for (Vertex s : part) {
      if (color_[s] >= 0 || mark_[s] == stamp_ + 1) continue;
      std::vector<Vertex> comp{s};
      mark_[s] = stamp_ + 1;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (Vertex w : g_.neighbors(comp[i]))
          if (color_[w] < 0 && mark_[w] != stamp_ + 1) {
            mark_[w] = stamp_ + 1;
            comp.push_back(w);
          }
      out.push_back(std::move(comp));
    }
    ++stamp_;
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
  }

  int used_colors() const {
    int m = -1;
    for (int col : color_) m = std::max(m, col);
    return m;
  }

  // Colours the uncoloured vertices of `part`, which has no uncoloured
  // neighbours outside itself. Independent components are solved one by
  // one: a failing component fails the whole part.
  bool search_part(const std::vector<Vertex>& part, int max_used) {
    auto comps = components(part);
    if (comps.empty()) return true;
    if (counter_ && !counter_->tick()) {
      aborted_ = true;
      return false;
    }
    if (comps.size() > 1) {
      std::vector<Vertex> solved;
      for (const auto& comp : comps) {
        if (!search_part(comp, used_colors())) {
          for (Vertex v : solved) unassign(v);
          return false;
        }
        solved.insert(solved.end(), comp.begin(), comp.end());
      }
      return true;
    }
    const auto& comp = comps.front();
    Vertex v = -1;
    for (Vertex w : comp)
      if (better(w, v)) v = w;
    if (sat_[v] >= c_) return false;
    const int limit = std::min(c_ - 1, max_used + 1);
    for (int col = 0; col <= limit; ++col) {
      if (!available(v, col)) continue;
      assign(v, col);
      if (search_part(comp, std::max(max_used, col))) return true;
      unassign(v);
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  int c_;
  NodeCounter* counter_;
  std::vector<int> color_;
  std::vector<int> seen_;
  std::vector<int> sat_;
  std::vector<int> mark_;
  int stamp_ = 0;
  int colored_ = 0;
  bool aborted_ = false;
};

DecisionResult decide(const Graph& g, int c, const std::vector<Vertex>& clique, NodeCounter& counter) {
  DecisionResult out;
  const auto start = counter.used();
  if (static_cast<int>(clique.size()) > c) {
    out.verdict = Verdict::no;
    return out;
  }
  if (g.order() == 0) {
    out.verdict = Verdict::yes;
    out.coloring = Coloring{};
    return out;
  }
  if (c < 1) {
    out.verdict = Verdict::no;
    return out;
  }
  Dsatur s(g, c, &counter);
  for (std::size_t i = 0; i < clique.size(); ++i) s.assign(clique[i], static_cast<int>(i));
  const bool found = s.search(static_cast<int>(clique.size()) - 1);
  out.nodes = counter.used() - start;
  if (found) {
    out.verdict = Verdict::yes;
    out.coloring = s.coloring();
    ensure_proper(g, *out.coloring, "k_colorable");
  } else {
    out.verdict = s.aborted() ? Verdict::inconclusive : Verdict::no;
  }
  return out;
}

}  // namespace

Coloring dsatur_coloring(const Graph& g) {
  Dsatur s(g, std::max(1, g.max_degree() + 1), nullptr);
  s.greedy();
  auto c = s.coloring();
  ensure_proper(g, c, "dsatur_coloring");
  return c;
}

ChromaticResult chromatic_number(const Graph& g, SearchBudget budget) {
  ChromaticResult r;
  if (g.order() == 0) {
    r.status = Verdict::yes;
    return r;
  }
  const auto clique = max_clique(g);
  r.clique = clique.vertices;
  r.lower = clique.size;
  r.coloring = canonical_colors(dsatur_coloring(g));
  r.upper = r.coloring.distinct_colors();
  NodeCounter counter(budget);
  while (r.lower < r.upper) {
    auto d = decide(g, r.lower, r.clique, counter);
    if (d.verdict == Verdict::yes) {
      r.upper = r.lower;
      r.coloring = *d.coloring;
      break;
    }
    if (d.verdict == Verdict::inconclusive) break;
    ++r.lower;
  }
  r.nodes = counter.used();
  r.status = r.lower == r.upper ? Verdict::yes : Verdict::inconclusive;
  ensure_proper(g, r.coloring, "chromatic_number");
  return r;
}

DecisionResult try_k_colorable(const Graph& g, int c, SearchBudget budget) {
  NodeCounter counter(budget);
  const auto clique = max_clique(g);
  return decide(g, c, clique.vertices, counter);
}

std::optional<Coloring> k_colorable(const Graph& g, int c, SearchBudget budget) {
  auto d = try_k_colorable(g, c, budget);
  if (d.verdict == Verdict::inconclusive) {
    throw BudgetExceeded("k_colorable search budget exhausted", d.nodes, budget.node_limit);
  }
  return d.coloring;
}

namespace {

class ListSearch {
 public:
  ListSearch(const Graph& g, std::vector<std::vector<int>> lists, NodeCounter& counter)
      : g_(g), lists_(std::move(lists)), counter_(counter), color_(g.order(), -1) {}

  bool run() {
    Vertex best = -1;
    int best_options = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] != -1) continue;
      const int options = count_options(v);
      if (best < 0 || options < best_options) {
        best = v;
        best_options = options;
      }
    }
    if (best < 0) return true;
    if (best_options == 0) return false;
    if (!counter_.tick()) {
      aborted_ = true;
      return false;
    }
    for (int col : lists_[best]) {
      if (!free(best, col)) continue;
      color_[best] = col;
      if (run()) return true;
      color_[best] = -1;
      if (aborted_) return false;
    }
    return false;
  }

  bool aborted() const { return aborted_; }
  const std::vector<int>& colors() const { return color_; }

 private:
  bool free(Vertex v, int col) const {
    for (Vertex w : g_.neighbors(v))
      if (color_[w] == col) return false;
    return true;
  }
  int count_options(Vertex v) const {
    int k = 0;
    for (int col : lists_[v]) k += free(v, col) ? 1 : 0;
    return k;
  }

  const Graph& g_;
  std::vector<std::vector<int>> lists_;
  NodeCounter& counter_;
  std::vector<int> color_;
  bool aborted_ = false;
};

}  // namespace

std::optional<Coloring> list_color(const Graph& g, const std::vector<std::vector<int>>& lists, SearchBudget budget) {
  if (static_cast<int>(lists.size()) != g.order()) throw PreconditionError("list_color needs one list per vertex");
  std::vector<std::vector<int>> clean(lists.size());
  for (std::size_t v = 0; v < lists.size(); ++v) {
    clean[v] = lists[v];
    std::sort(clean[v].begin(), clean[v].end());
    clean[v].erase(std::unique(clean[v].begin(), clean[v].end()), clean[v].end());
    for (int col : clean[v])
      if (col < 0) throw PreconditionError("list colours must be non-negative");
  }
  NodeCounter counter(budget);
  ListSearch s(g, clean, counter);
  if (s.run()) {
    Coloring c{s.colors()};
    ensure_proper(g, c, "list_color");
    for (Vertex v = 0; v < g.order(); ++v)
      if (!std::binary_search(clean[v].begin(), clean[v].end(), c.colors[v]))
        throw std::logic_error("list_color left a vertex's list");
    return c;
  }
  if (s.aborted()) throw BudgetExceeded("list_color search budget exhausted", counter.used(), budget.node_limit);
  return std::nullopt;
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

class SetSearch {
 public:
  SetSearch(const Graph& g, int a, int b, NodeCounter& counter)
      : g_(g), a_(a), b_(b), counter_(counter), mask_(g.order(), 0), done_(g.order(), 0) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << a); ++m)
      if (std::popcount(m) == b) subsets_.push_back(m);
  }

  bool run(int colored) {
    if (colored == g_.order()) return true;
    if (!counter_.tick()) {
      aborted_ = true;
      return false;
    }
    Vertex best = -1;
    std::uint64_t best_options = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (done_[v]) continue;
      const auto options = binomial(a_ - std::popcount(forbidden(v)), b_);
      if (best < 0 || options < best_options ||
          (options == best_options && g_.degree(v) > g_.degree(best))) {
        best = v;
        best_options = options;
      }
    }
    if (best_options == 0) return false;
    const std::uint64_t bad = forbidden(best);
    done_[best] = 1;
    for (std::uint64_t m : subsets_) {
      if (m & bad) continue;
      mask_[best] = m;
      if (run(colored + 1)) return true;
      if (aborted_) break;
      // All colours are interchangeable for the very first vertex.
      if (colored == 0) break;
    }
    done_[best] = 0;
    mask_[best] = 0;
    return false;
  }

  bool aborted() const { return aborted_; }
  std::uint64_t mask(Vertex v) const { return mask_[v]; }

 private:
  std::uint64_t forbidden(Vertex v) const {
    std::uint64_t f = 0;
    for (Vertex w : g_.neighbors(v))
      if (done_[w]) f |= mask_[w];
    return f;
  }

  const Graph& g_;
  int a_, b_;
  NodeCounter& counter_;
  std::vector<std::uint64_t> subsets_;
  std::vector<std::uint64_t> mask_;
  std::vector<char> done_;
  bool aborted_ = false;
};

}  // namespace

std::optional<SetColoring> ab_coloring(const Graph& g, int a, int b, SearchBudget budget) {
  if (b < 1 || a < b) throw PreconditionError("ab_coloring needs a >= b >= 1");
  if (a > 30) throw PreconditionError("ab_coloring supports a <= 30");
  NodeCounter counter(budget);
  SetSearch s(g, a, b, counter);
  if (!s.run(0)) {
    if (s.aborted()) throw BudgetExceeded("ab_coloring search budget exhausted", counter.used(), budget.node_limit);
    return std::nullopt;
  }
  SetColoring out{a, b, std::vector<std::vector<int>>(g.order())};
  for (Vertex v = 0; v < g.order(); ++v)
    for (int bit = 0; bit < a; ++bit)
      if (s.mask(v) >> bit & 1U) out.sets[v].push_back(bit + 1);
  if (!is_valid_set_coloring(g, out)) throw std::logic_error("ab_coloring produced an invalid set colouring");
  return out;
}

std::vector<Coloring> all_colorings(const Graph& g, int c) {
  std::vector<Coloring> out;
  std::vector<int> color(g.order(), -1);
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (v == g.order()) {
      out.push_back(Coloring{color});
      return;
    }
    for (int col = 0; col < c; ++col) {
      bool ok = true;
      for (Vertex w : g.neighbors(v))
        if (w < v && color[w] == col) ok = false;
      if (!ok) continue;
      color[v] = col;
      self(self, v + 1);
    }
    color[v] = -1;
  };
  rec(rec, 0);
  return out;
}

}  // namespace minorcolor
