#include "minorcolor/restricted.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <cstdint>
#include <set>

#include "minorcolor/errors.hpp"
#include "minorcolor/exact_coloring.hpp"
#include "minorcolor/oracles.hpp"
#include "minorcolor/planarity.hpp"

namespace minorcolor {

const char* to_string(ColorMode m) {
  switch (m) {
    case ColorMode::apex: return "apex";
    case ColorMode::degree: return "degree";
    case ColorMode::trianglefree: return "trianglefree";
  }
  return "?";
}

ColorMode parse_color_mode(const std::string& s) {
  if (s == "apex") return ColorMode::apex;
  if (s == "degree") return ColorMode::degree;
  if (s == "trianglefree") return ColorMode::trianglefree;
  throw PreconditionError("unknown colouring mode '" + s + "'");
}

int trianglefree_palette(int t) { return (13 * t + 172 + 13) / 14; }

std::vector<Vertex> degenerate_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> gone(n, 0);
  std::vector<Vertex> removal;
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    gone[v] = 1;
    removal.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (gone[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

RestrictednessReport is_restricted(const Graph& g, const RootedTreeDecomposition& td, int t, int a) {
  const Graph torso = torso_expansion(g, td);
  RestrictednessReport r;
  auto flag = [&](int node, std::string why) {
    r.is_restricted = false;
    r.violations.push_back({node, std::move(why)});
  };
  for (int z = 0; z < td.node_count(); ++z) {
    const auto up = td.up(z);
    const auto down = td.down(z);
    if (static_cast<int>(up.size()) > t - 1) {
      flag(z, "adhesion has " + std::to_string(up.size()) + " vertices, more than t-1 = " + std::to_string(t - 1));
    }
    if (!is_planar(induced_subgraph(torso, down).graph)) flag(z, "torso on the down-bag is not planar");
    for (Vertex x : down) {
      int hits = 0;
      for (Vertex u : up) hits += g.adjacent(x, u) ? 1 : 0;
      if (hits > a - 1) {
        flag(z, "vertex " + std::to_string(x) + " has " + std::to_string(hits) + " neighbours in the adhesion, more than a-1 = " +
                    std::to_string(a - 1));
      }
    }
  }
  return r;
}

namespace {

// Independent sets of g inside one bag whose members in the down-part form
// a torso clique. Bags are small, so plain bitmasks suffice.
class BagSets {
 public:
  BagSets(const Graph& g, const Graph& torso, const std::vector<Vertex>& bag, const std::vector<Vertex>& down)
      : bag_(bag), adj_(bag.size(), 0), tadj_(bag.size(), 0), in_down_(bag.size(), 0) {
    if (bag.size() > 63) throw BudgetExceeded("bag too large for the colour invariant audit", bag.size(), 63);
    for (std::size_t i = 0; i < bag.size(); ++i) {
      in_down_[i] = std::binary_search(down.begin(), down.end(), bag[i]);
      for (std::size_t j = 0; j < bag.size(); ++j) {
        if (i == j) continue;
        if (g.adjacent(bag[i], bag[j])) adj_[i] |= bit(j);
        if (torso.adjacent(bag[i], bag[j])) tadj_[i] |= bit(j);
      }
    }
  }

  // Largest number of distinct colours on an admissible set drawn from the
  // coloured members of `allowed`.
  int max_colors(const std::vector<int>& color, std::uint64_t allowed) {
    color_ = &color;
    allowed_ = allowed;
    counts_.clear();
    best_ = 0;
    distinct_ = 0;
    ++audits_;
    grow(0, 0, 0);
    return best_;
  }

  // Calls visit(colour set) for each admissible set drawn from `allowed`.
  template <class F>
  void each_set(const std::vector<int>& color, std::uint64_t allowed, F&& visit) {
    std::vector<int> cols;
    walk(color, allowed, 0, 0, 0, cols, visit);
  }

  int index(Vertex v) const {
    return static_cast<int>(std::lower_bound(bag_.begin(), bag_.end(), v) - bag_.begin());
  }
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }
  std::uint64_t down_mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < bag_.size(); ++i)
      if (in_down_[i]) m |= bit(i);
    return m;
  }
  const std::vector<Vertex>& bag() const { return bag_; }
  std::uint64_t g_adj(int i) const { return adj_[i]; }
  std::uint64_t torso_adj(int i) const { return tadj_[i]; }
  long long audits() const { return audits_; }

 private:
  bool admissible(std::size_t i, std::uint64_t chosen, std::uint64_t chosen_down) const {
    if (adj_[i] & chosen) return false;
    if (in_down_[i] && (tadj_[i] & chosen_down) != chosen_down) return false;
    return true;
  }

  void grow(std::size_t from, std::uint64_t chosen, std::uint64_t chosen_down) {
    best_ = std::max(best_, distinct_);
    for (std::size_t i = from; i < bag_.size(); ++i) {
      if (!(allowed_ & bit(i))) continue;
      const int col = (*color_)[bag_[i]];
      if (col < 0 || !admissible(i, chosen, chosen_down)) continue;
      if (counts_[col]++ == 0) ++distinct_;
      grow(i + 1, chosen | bit(i), in_down_[i] ? chosen_down | bit(i) : chosen_down);
      if (--counts_[col] == 0) --distinct_;
    }
  }

  template <class F>
  void walk(const std::vector<int>& color, std::uint64_t allowed, std::size_t from, std::uint64_t chosen,
            std::uint64_t chosen_down, std::vector<int>& cols, F& visit) {
    visit(cols);
    for (std::size_t i = from; i < bag_.size(); ++i) {
      if (!(allowed & bit(i))) continue;
      const int col = color[bag_[i]];
      if (col < 0 || !admissible(i, chosen, chosen_down)) continue;
      cols.push_back(col);
      walk(color, allowed, i + 1, chosen | bit(i), in_down_[i] ? chosen_down | bit(i) : chosen_down, cols, visit);
      cols.pop_back();
    }
  }

  std::vector<Vertex> bag_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> tadj_;
  std::vector<char> in_down_;
  const std::vector<int>* color_ = nullptr;
  std::uint64_t allowed_ = 0;
  std::map<int, int> counts_;
  int distinct_ = 0;
  int best_ = 0;
  long long audits_ = 0;
};

void color_apex(const Graph& g, const RootedTreeDecomposition& td, int t, std::vector<int>& color) {
  const int palette = t + 3;
  for (int z : td.top_down_order()) {
    std::set<int> used;
    for (Vertex u : td.up(z)) used.insert(color[u]);
    std::vector<int> avail;
    for (int c = 0; c < palette && avail.size() < 4; ++c)
      if (!used.count(c)) avail.push_back(c);
    const auto down = td.down(z);
    const auto piece = induced_subgraph(g, down);
    const auto four = k_colorable(piece.graph, static_cast<int>(avail.size()));
    if (!four) throw LemmaViolation("no 4-colouring of the planar piece at node " + std::to_string(z));
    for (std::size_t i = 0; i < down.size(); ++i) color[down[i]] = avail[four->colors[i]];
  }
}

void color_degree(const Graph& g, const RootedTreeDecomposition& td, int a, std::vector<int>& color) {
  const int palette = a + 4;
  for (int z : td.top_down_order()) {
    const auto up = td.up(z);
    const auto down = td.down(z);
    std::vector<std::vector<int>> lists;
    for (Vertex x : down) {
      std::set<int> used;
      for (Vertex u : up)
        if (g.adjacent(x, u)) used.insert(color[u]);
      std::vector<int> list;
      for (int c = 0; c < palette; ++c)
        if (!used.count(c)) list.push_back(c);
      lists.push_back(std::move(list));
    }
    const auto piece = induced_subgraph(g, down);
    const auto col = list_color(piece.graph, lists);
    if (!col) throw LemmaViolation("no list colouring of the planar piece at node " + std::to_string(z));
    for (std::size_t i = 0; i < down.size(); ++i) color[down[i]] = col->colors[i];
  }
}

void color_trianglefree(const Graph& g, const Graph& torso, const RootedTreeDecomposition& td, int t,
                        std::vector<int>& color, RestrictedColoring& out) {
  const int c = trianglefree_palette(t);
  const int cap = c - 6;
  int worst = cap;
  long long audits = 0;
  for (int z : td.top_down_order()) {
    const auto& bag = td.bags[z];
    const auto up = td.up(z);
    const auto down = td.down(z);
    BagSets sets(g, torso, bag, down);
    const auto piece = induced_subgraph(torso, down);
    std::uint64_t up_mask = 0;
    for (Vertex u : up) up_mask |= BagSets::bit(sets.index(u));
    std::uint64_t done_down = 0;
    for (Vertex local : degenerate_order(piece.graph)) {
      const Vertex x = down[local];
      const int xi = sets.index(x);
      const std::uint64_t p_mask = sets.torso_adj(xi) & done_down;
      const std::uint64_t q_mask = p_mask | up_mask;
      const std::uint64_t n_mask = q_mask & sets.g_adj(xi);
      std::vector<char> on_n(c, 0), forbidden(c, 0);
      for (std::size_t i = 0; i < bag.size(); ++i)
        if (n_mask & BagSets::bit(i)) on_n[color[bag[i]]] = 1;
      sets.each_set(color, q_mask & ~n_mask, [&](const std::vector<int>& cols) {
        std::set<int> distinct(cols.begin(), cols.end());
        const int k = static_cast<int>(distinct.size());
        if (k >= cap + 1) {
          std::fill(forbidden.begin(), forbidden.end(), 1);
        } else if (k == cap) {
          for (int col = 0; col < c; ++col)
            if (!distinct.count(col)) forbidden[col] = 1;
        }
      });
      int pick = -1;
      for (int col = 0; col < c && pick < 0; ++col)
        if (!on_n[col] && !forbidden[col]) pick = col;
      if (pick < 0) {
        throw LemmaViolation("no admissible colour for vertex " + std::to_string(x) + " at node " + std::to_string(z) +
                             " with palette " + std::to_string(c));
      }
      color[x] = pick;
      done_down |= BagSets::bit(xi);
      const int seen = sets.max_colors(color, ~std::uint64_t{0});
      worst = std::min(worst, cap - seen);
      if (seen > cap) {
        throw LemmaViolation("colour invariant broken at node " + std::to_string(z) + ": " + std::to_string(seen) +
                             " colours on an admissible independent set");
      }
    }
    audits += sets.audits();
  }
  // Final sweep over every node with the complete colouring.
  for (int z = 0; z < td.node_count(); ++z) {
    BagSets sets(g, torso, td.bags[z], td.down(z));
    const int seen = sets.max_colors(color, ~std::uint64_t{0});
    ++audits;
    worst = std::min(worst, cap - seen);
    if (seen > cap) throw LemmaViolation("colour invariant broken at node " + std::to_string(z) + " after colouring");
  }
  out.worst_margin = worst;
  out.star_audits = audits;
}

}  // namespace

RestrictedColoring restricted_color(const Graph& g, const RootedTreeDecomposition& td, int t, int a, ColorMode mode) {
  if (t < 1 || a < 1) throw PreconditionError("t and a must be positive");
  const auto report = is_restricted(g, td, t, a);
  if (!report.is_restricted) {
    const auto& v = report.violations.front();
    throw PreconditionError("decomposition is not (t,a)-restricted: node " + std::to_string(v.node) + ": " + v.reason);
  }
  RestrictedColoring out;
  out.mode = mode;
  std::vector<int> color(g.order(), -1);
  switch (mode) {
    case ColorMode::apex:
      out.palette = t + 3;
      color_apex(g, td, t, color);
      break;
    case ColorMode::degree:
      out.palette = a + 4;
      color_degree(g, td, a, color);
      break;
    case ColorMode::trianglefree:
      if (!is_triangle_free(g)) throw PreconditionError("trianglefree mode needs a triangle-free graph");
      out.palette = trianglefree_palette(t);
      color_trianglefree(g, torso_expansion(g, td), td, t, color, out);
      break;
  }
  out.coloring = Coloring{std::move(color)};
  ensure_proper(g, out.coloring, std::string("restricted_color/") + to_string(mode));
  out.colors_used = out.coloring.distinct_colors();
  if (out.coloring.max_color() >= out.palette) throw std::logic_error("restricted_color left its palette");
  return out;
}

}  // namespace minorcolor
