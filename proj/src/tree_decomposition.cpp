#include "minorcolor/tree_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "minorcolor/oracles.hpp"

namespace minorcolor {

int RootedTreeDecomposition::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
  return w - 1;
}

std::vector<Vertex> RootedTreeDecomposition::up(int node) const {
  if (parent[node] < 0) return {};
  std::vector<Vertex> out;
  const auto& a = bags[node];
  const auto& b = bags[parent[node]];
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> RootedTreeDecomposition::down(int node) const {
  if (parent[node] < 0) return bags[node];
  std::vector<Vertex> out;
  const auto& a = bags[node];
  const auto& b = bags[parent[node]];
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::vector<int>> RootedTreeDecomposition::children() const {
  std::vector<std::vector<int>> kids(bags.size());
  for (int z = 0; z < node_count(); ++z)
    if (parent[z] >= 0) kids[parent[z]].push_back(z);
  return kids;
}

std::vector<int> RootedTreeDecomposition::top_down_order() const {
  const auto kids = children();
  std::vector<int> order{root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : kids[order[i]]) order.push_back(c);
  return order;
}

std::vector<int> RootedTreeDecomposition::depth() const {
  std::vector<int> d(bags.size(), 0);
  for (int z : top_down_order())
    if (parent[z] >= 0) d[z] = d[parent[z]] + 1;
  return d;
}

RootedTreeDecomposition make_decomposition(std::vector<int> parent, std::vector<std::vector<Vertex>> bags) {
  if (parent.size() != bags.size() || bags.empty()) {
    throw PreconditionError("decomposition needs one parent entry per bag and at least one bag");
  }
  RootedTreeDecomposition td;
  const int n = static_cast<int>(bags.size());
  int root = -1;
  for (int z = 0; z < n; ++z) {
    if (parent[z] < 0) {
      if (root >= 0) throw PreconditionError("decomposition has more than one root");
      root = z;
      parent[z] = -1;
    } else if (parent[z] >= n || parent[z] == z) {
      throw PreconditionError("decomposition node " + std::to_string(z) + " has an invalid parent");
    }
  }
  if (root < 0) throw PreconditionError("decomposition has no root");
  for (auto& b : bags) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  td.parent = std::move(parent);
  td.bags = std::move(bags);
  td.root = root;
  if (static_cast<int>(td.top_down_order().size()) != n) {
    throw PreconditionError("decomposition tree is not connected to its root (cycle in parent links)");
  }
  return td;
}

std::variant<int, std::vector<TdViolation>> validate_td(const Graph& g, const RootedTreeDecomposition& td) {
  std::vector<TdViolation> violations;
  const int n = g.order();
  std::vector<std::vector<int>> holders(n);
  for (int z = 0; z < td.node_count(); ++z) {
    for (Vertex v : td.bags[z]) {
      if (v < 0 || v >= n) {
        violations.push_back({"vertex-out-of-range", {v}, "bag " + std::to_string(z) + " names vertex " + std::to_string(v)});
        continue;
      }
      holders[v].push_back(z);
    }
  }
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (int z : holders[e.u]) {
      if (std::binary_search(td.bags[z].begin(), td.bags[z].end(), e.v)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      violations.push_back({"edge-uncovered", {e.u, e.v},
                            "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " lies in no bag"});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (holders[v].empty()) {
      violations.push_back({"vertex-missing", {v}, "vertex " + std::to_string(v) + " lies in no bag"});
      continue;
    }
    // The holder nodes form a subtree iff exactly one of them has its
    // parent outside the holder set.
    std::unordered_set<int> in(holders[v].begin(), holders[v].end());
    int tops = 0;
    for (int z : holders[v])
      if (td.parent[z] < 0 || !in.count(td.parent[z])) ++tops;
    if (tops != 1) {
      violations.push_back({"disconnected-trace", {v},
                            "bags containing vertex " + std::to_string(v) + " do not form a subtree"});
    }
  }
  if (!violations.empty()) return violations;
  return td.width();
}

bool is_valid_td(const Graph& g, const RootedTreeDecomposition& td) {
  return std::holds_alternative<int>(validate_td(g, td));
}

Graph torso_expansion(const Graph& g, const RootedTreeDecomposition& td) {
  if (!is_valid_td(g, td)) throw PreconditionError("torso expansion needs a valid tree decomposition");
  std::vector<Edge> edges = g.edges();
  for (int z = 0; z < td.node_count(); ++z) {
    const auto adhesion = td.up(z);
    for (std::size_t i = 0; i < adhesion.size(); ++i)
      for (std::size_t j = i + 1; j < adhesion.size(); ++j) edges.emplace_back(adhesion[i], adhesion[j]);
  }
  return Graph(g.order(), std::move(edges));
}

namespace {

using Partition = std::vector<signed char>;

Partition canonical(const Partition& p) {
  Partition out(p.size());
  signed char rename[128];
  std::fill(std::begin(rename), std::end(rename), static_cast<signed char>(-1));
  signed char next = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (rename[p[i]] < 0) rename[p[i]] = next++;
    out[i] = rename[p[i]];
  }
  return out;
}

// Positions of `sub` inside the sorted bag `bag`.
std::vector<int> positions(const std::vector<Vertex>& bag, const std::vector<Vertex>& sub) {
  std::vector<int> pos;
  pos.reserve(sub.size());
  for (Vertex v : sub)
    pos.push_back(static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin()));
  return pos;
}

Partition project(const Partition& p, const std::vector<int>& pos) {
  Partition q;
  q.reserve(pos.size());
  for (int i : pos) q.push_back(p[i]);
  return canonical(q);
}

class BagColoringDp {
 public:
  BagColoringDp(const Graph& g, const RootedTreeDecomposition& td)
      : g_(g), td_(td), kids_(td.children()), order_(td.top_down_order()) {}

  bool feasible(int colors) {
    colors_ = colors;
    feasible_.assign(td_.node_count(), {});
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const int z = *it;
      std::vector<std::set<Partition>> child_projections;
      std::vector<std::vector<int>> child_positions;
      for (int c : kids_[z]) {
        const auto adhesion = td_.up(c);
        const auto in_child = positions(td_.bags[c], adhesion);
        std::set<Partition> proj;
        for (const auto& p : feasible_[c]) proj.insert(project(p, in_child));
        child_projections.push_back(std::move(proj));
        child_positions.push_back(positions(td_.bags[z], adhesion));
      }
      const auto& bag = td_.bags[z];
      Partition current(bag.size(), 0);
      enumerate(bag, 0, 0, current, [&](const Partition& p) {
        ++states_;
        for (std::size_t i = 0; i < child_projections.size(); ++i)
          if (!child_projections[i].count(project(p, child_positions[i]))) return;
        feasible_[z].push_back(p);
      });
      if (feasible_[z].empty()) return false;
    }
    return true;
  }

  Coloring reconstruct() const {
    Coloring c;
    c.colors.assign(g_.order(), -1);
    std::vector<Partition> chosen(td_.node_count());
    for (int z : order_) {
      const auto& bag = td_.bags[z];
      if (td_.parent[z] < 0) {
        chosen[z] = feasible_[z].front();
      } else {
        const int p = td_.parent[z];
        const auto adhesion = td_.up(z);
        const auto target = project(chosen[p], positions(td_.bags[p], adhesion));
        const auto in_child = positions(bag, adhesion);
        for (const auto& cand : feasible_[z]) {
          if (project(cand, in_child) == target) {
            chosen[z] = cand;
            break;
          }
        }
      }
      // Blocks holding already-coloured vertices keep their colour; fresh
      // blocks take the smallest unused colours.
      std::map<int, int> block_color;
      std::vector<char> used(colors_, 0);
      for (std::size_t i = 0; i < bag.size(); ++i) {
        if (c.colors[bag[i]] >= 0) {
          block_color[chosen[z][i]] = c.colors[bag[i]];
          used[c.colors[bag[i]]] = 1;
        }
      }
      int next = 0;
      for (std::size_t i = 0; i < bag.size(); ++i) {
        if (c.colors[bag[i]] >= 0) continue;
        auto it = block_color.find(chosen[z][i]);
        if (it == block_color.end()) {
          while (used[next]) ++next;
          used[next] = 1;
          it = block_color.emplace(chosen[z][i], next).first;
        }
        c.colors[bag[i]] = it->second;
      }
    }
    return c;
  }

  std::uint64_t states() const { return states_; }

 private:
  template <typename Visit>
  void enumerate(const std::vector<Vertex>& bag, std::size_t i, int blocks, Partition& p, Visit&& visit) {
    if (i == bag.size()) {
      visit(p);
      return;
    }
    for (int b = 0; b <= blocks && b < colors_; ++b) {
      bool clash = false;
      for (std::size_t j = 0; j < i; ++j) {
        if (p[j] == b && g_.adjacent(bag[i], bag[j])) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      p[i] = static_cast<signed char>(b);
      enumerate(bag, i + 1, std::max(blocks, b + 1), p, visit);
    }
  }

  const Graph& g_;
  const RootedTreeDecomposition& td_;
  std::vector<std::vector<int>> kids_;
  std::vector<int> order_;
  int colors_ = 0;
  std::vector<std::vector<Partition>> feasible_;
  std::uint64_t states_ = 0;
};

}  // namespace

TdColoringResult chromatic_td(const Graph& g, const RootedTreeDecomposition& td, int max_width) {
  if (!is_valid_td(g, td)) throw PreconditionError("chromatic_td needs a valid tree decomposition");
  const int w = td.width();
  if (w > max_width) {
    throw BudgetExceeded("decomposition width " + std::to_string(w) + " exceeds the DP limit " +
                             std::to_string(max_width),
                         static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(max_width));
  }
  TdColoringResult result;
  if (g.order() == 0) return result;
  BagColoringDp dp(g, td);
  const int lower = std::max(1, clique_number(g));
  for (int c = lower; c <= w + 1; ++c) {
    if (dp.feasible(c)) {
      result.chromatic_number = c;
      result.coloring = dp.reconstruct();
      result.states = dp.states();
      ensure_proper(g, result.coloring, "chromatic_td");
      return result;
    }
  }
  throw std::logic_error("chromatic_td: no colouring with width+1 colours");
}

RootedTreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (n == 0) return make_decomposition({-1}, {{}});
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("elimination order must list every vertex");
  std::vector<std::set<Vertex>> fill(n);
  for (const Edge& e : g.edges()) {
    fill[e.u].insert(e.v);
    fill[e.v].insert(e.u);
  }
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::vector<Vertex>> bags(n);
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<Vertex> later(fill[v].begin(), fill[v].end());
    bags[i] = later;
    bags[i].push_back(v);
    int first = -1;
    for (Vertex w : later)
      if (first < 0 || position[w] < first) first = position[w];
    parent[i] = first;
    for (std::size_t a = 0; a < later.size(); ++a) {
      fill[later[a]].erase(v);
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        fill[later[a]].insert(later[b]);
        fill[later[b]].insert(later[a]);
      }
    }
  }
  // Components finish at their own root; hang them under the last bag.
  for (int i = 0; i < n - 1; ++i)
    if (parent[i] < 0) parent[i] = n - 1;
  parent[n - 1] = -1;
  return make_decomposition(std::move(parent), std::move(bags));
}

TreewidthResult treewidth_min_fill(const Graph& g) {
  const int n = g.order();
  std::vector<std::set<Vertex>> fill(n);
  for (const Edge& e : g.edges()) {
    fill[e.u].insert(e.v);
    fill[e.v].insert(e.u);
  }
  std::vector<char> gone(n, 0);
  TreewidthResult result;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    long best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long missing = 0;
      for (auto a = fill[v].begin(); a != fill[v].end(); ++a)
        for (auto b = std::next(a); b != fill[v].end(); ++b)
          if (!fill[*a].count(*b)) ++missing;
      if (pick < 0 || missing < best) {
        pick = v;
        best = missing;
      }
    }
    result.value = std::max(result.value, static_cast<int>(fill[pick].size()));
    std::vector<Vertex> nb(fill[pick].begin(), fill[pick].end());
    for (std::size_t a = 0; a < nb.size(); ++a) {
      fill[nb[a]].erase(pick);
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        fill[nb[a]].insert(nb[b]);
        fill[nb[b]].insert(nb[a]);
      }
    }
    gone[pick] = 1;
    result.elimination_order.push_back(pick);
  }
  return result;
}

namespace {

int degeneracy(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    best = std::max(best, deg[pick]);
    gone[pick] = 1;
    for (Vertex w : g.neighbors(pick))
      if (!gone[w]) --deg[w];
  }
  return best;
}

class EliminationSearch {
 public:
  EliminationSearch(const Graph& g, NodeCounter& counter) : n_(g.order()), adj_(g.order(), 0), counter_(counter) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= std::uint64_t{1} << e.v;
      adj_[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  // Some elimination order of width <= k exists.
  bool decide(int k, std::vector<Vertex>& order) {
    k_ = k;
    failed_.clear();
    order.clear();
    return feasible(0, order);
  }

 private:
  int outside_degree(std::uint64_t eliminated, int v) const {
    std::uint64_t comp = std::uint64_t{1} << v;
    std::uint64_t reach = adj_[v];
    while (true) {
      const std::uint64_t grow = reach & eliminated & ~comp;
      if (!grow) break;
      comp |= grow;
      for (std::uint64_t bits = grow; bits; bits &= bits - 1) reach |= adj_[std::countr_zero(bits)];
    }
    return std::popcount(reach & ~eliminated & ~comp);
  }

  bool feasible(std::uint64_t eliminated, std::vector<Vertex>& order) {
    const int left = n_ - std::popcount(eliminated);
    if (left <= k_ + 1) {
      for (int v = 0; v < n_; ++v)
        if (!(eliminated >> v & 1U)) order.push_back(v);
      return true;
    }
    if (failed_.count(eliminated)) return false;
    if (!counter_.tick()) return false;
    for (int v = 0; v < n_; ++v) {
      if (eliminated >> v & 1U) continue;
      if (outside_degree(eliminated, v) > k_) continue;
      order.push_back(v);
      if (feasible(eliminated | (std::uint64_t{1} << v), order)) return true;
      order.pop_back();
      if (counter_.exhausted()) return false;
    }
    failed_.insert(eliminated);
    return false;
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  NodeCounter& counter_;
  int k_ = 0;
  std::unordered_set<std::uint64_t> failed_;
};

}  // namespace

TreewidthResult treewidth(const Graph& g, int exact_limit, SearchBudget budget) {
  TreewidthResult upper = treewidth_min_fill(g);
  if (g.order() > std::min(exact_limit, 64)) return upper;
  const int lower = degeneracy(g);
  if (lower >= upper.value) {
    upper.exact = true;
    return upper;
  }
  NodeCounter counter(budget);
  EliminationSearch search(g, counter);
  for (int k = lower; k < upper.value; ++k) {
    std::vector<Vertex> order;
    if (search.decide(k, order)) return {k, true, std::move(order)};
    if (counter.exhausted()) return upper;
  }
  upper.exact = true;
  return upper;
}

}  // namespace minorcolor
