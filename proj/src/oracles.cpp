#include "minorcolor/oracles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "bitset.hpp"

namespace minorcolor {

using detail::Bitset;

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : adj_(detail::adjacency_bitsets(g)), n_(g.order()) {}

  std::vector<Vertex> run() {
    Bitset all(n_);
    for (int v = 0; v < n_; ++v) all.set(v);
    if (n_ > 0) best_ = {0};
    expand(all);
    return best_;
  }

 private:
  void expand(Bitset candidates) {
    // Greedy colour classes give an upper bound on the clique extendable
    // from each prefix of the ordering.
    std::vector<std::pair<int, int>> ordered;  // (vertex, colour)
    Bitset uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      for (int v = q.first(); v >= 0; v = q.first()) {
        uncolored.reset(v);
        q.reset(v);
        q.subtract(adj_[v]);
        ordered.emplace_back(v, color);
      }
    }
    for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
      const auto [v, bound] = *it;
      if (current_.size() + bound <= best_.size()) return;
      current_.push_back(v);
      Bitset next = candidates & adj_[v];
      if (!next.any()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<Bitset> adj_;
  int n_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : adj_(detail::adjacency_bitsets(g)), n_(g.order()) {}

  std::vector<Vertex> run() {
    Bitset all(n_);
    for (int v = 0; v < n_; ++v) all.set(v);
    branch(all);
    return best_;
  }

 private:
  void branch(Bitset live) {
    std::vector<Vertex> forced;
    // Degree-0 and degree-1 vertices belong to some maximum independent set.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = live.first(); v >= 0; v = live.next(v)) {
        Bitset nb = live & adj_[v];
        if (nb.count() <= 1) {
          forced.push_back(v);
          live.reset(v);
          live.subtract(nb);
          changed = true;
        }
      }
    }
    const std::size_t mark = current_.size();
    current_.insert(current_.end(), forced.begin(), forced.end());
    if (!live.any()) {
      if (current_.size() > best_.size()) best_ = current_;
    } else if (current_.size() + static_cast<std::size_t>(live.count()) > best_.size()) {
      int pick = -1, pick_deg = -1;
      for (int v = live.first(); v >= 0; v = live.next(v)) {
        const int d = (live & adj_[v]).count();
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      Bitset with = live;
      with.reset(pick);
      with.subtract(adj_[pick]);
      current_.push_back(pick);
      branch(std::move(with));
      current_.pop_back();
      live.reset(pick);
      branch(std::move(live));
    }
    current_.resize(mark);
  }

  std::vector<Bitset> adj_;
  int n_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

VertexSetWitness max_clique(const Graph& g) {
  auto vs = CliqueSearch(g).run();
  std::sort(vs.begin(), vs.end());
  return {static_cast<int>(vs.size()), std::move(vs)};
}

int clique_number(const Graph& g) { return max_clique(g).size; }

VertexSetWitness max_independent_set(const Graph& g) {
  auto vs = IndependentSetSearch(g).run();
  std::sort(vs.begin(), vs.end());
  return {static_cast<int>(vs.size()), std::move(vs)};
}

int independence_number(const Graph& g) { return max_independent_set(g).size; }

bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        std::array<Vertex, 3> t{e.u, e.v, *ia};
        std::sort(t.begin(), t.end());
        return t;
      }
    }
  }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

std::optional<BicliqueWitness> find_complete_bipartite(const Graph& g, int a, int b) {
  if (a < 1 || b < a) throw std::invalid_argument("complete bipartite test needs 1 <= a <= b");
  const int n = g.order();
  if (a + b > n) return std::nullopt;
  auto adj = detail::adjacency_bitsets(g);
  std::vector<Vertex> chosen;
  std::optional<BicliqueWitness> found;
  // Grow the a-side; the common neighbourhood never contains chosen vertices.
  auto grow = [&](auto&& self, Vertex from, const Bitset& common) -> void {
    if (found) return;
    if (static_cast<int>(chosen.size()) == a) {
      BicliqueWitness w{chosen, {}};
      for (int v = common.first(); v >= 0 && static_cast<int>(w.right.size()) < b; v = common.next(v)) {
        w.right.push_back(v);
      }
      found = std::move(w);
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      if (g.degree(v) < b) continue;
      Bitset next = chosen.empty() ? adj[v] : (common & adj[v]);
      if (next.count() < b) continue;
      chosen.push_back(v);
      self(self, v + 1, next);
      chosen.pop_back();
      if (found) return;
    }
  };
  grow(grow, 0, Bitset(n));
  return found;
}

bool contains_complete_bipartite(const Graph& g, int a, int b) {
  return find_complete_bipartite(g, a, b).has_value();
}

int local_connectivity(const Graph& g, Vertex s, Vertex t) {
  // Vertex v becomes in-node 2v and out-node 2v+1 joined by a unit arc.
  const int n = g.order();
  const int nodes = 2 * n;
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(nodes);
  auto add = [&](int from, int to, int cap) {
    out[from].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, cap});
    out[to].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0});
  };
  const int inf = n + 1;
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
  for (const Edge& e : g.edges()) {
    add(2 * e.u + 1, 2 * e.v, inf);
    add(2 * e.v + 1, 2 * e.u, inf);
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> via(nodes, -1);
    std::deque<int> queue{source};
    std::vector<char> seen(nodes, 0);
    seen[source] = 1;
    while (!queue.empty() && !seen[sink]) {
      const int x = queue.front();
      queue.pop_front();
      for (int id : out[x]) {
        if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
          seen[arcs[id].to] = 1;
          via[arcs[id].to] = id;
          queue.push_back(arcs[id].to);
        }
      }
    }
    if (!seen[sink]) break;
    for (int x = sink; x != source;) {
      const int id = via[x];
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      x = arcs[id ^ 1].to;
    }
    ++flow;
    if (flow >= n) break;
  }
  return flow;
}

int connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("connectivity needs at least 2 vertices");
  int best = n - 1;
  // Even's scheme: some vertex among the first best+1 lies outside a minimum
  // separator, so only pairs with one end in that prefix are needed.
  for (Vertex s = 0; s < n && s <= best; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, local_connectivity(g, s, t));
    }
  }
  return best;
}

std::optional<std::vector<Vertex>> find_subgraph(const Graph& g, const Graph& f, NodeCounter* counter) {
  const int k = f.order();
  if (k > g.order() || f.size() > g.size()) return std::nullopt;
  // Map f's vertices in BFS order from high-degree roots so every mapped
  // vertex after the first usually has a mapped neighbour to anchor it.
  std::vector<Vertex> sequence;
  std::vector<char> placed(k, 0);
  while (static_cast<int>(sequence.size()) < k) {
    Vertex root = -1;
    for (Vertex v = 0; v < k; ++v)
      if (!placed[v] && (root < 0 || f.degree(v) > f.degree(root))) root = v;
    placed[root] = 1;
    std::size_t head = sequence.size();
    sequence.push_back(root);
    for (; head < sequence.size(); ++head) {
      for (Vertex w : f.neighbors(sequence[head])) {
        if (!placed[w]) {
          placed[w] = 1;
          sequence.push_back(w);
        }
      }
    }
  }
  std::vector<Vertex> image(k, -1);
  std::vector<char> used(g.order(), 0);
  bool aborted = false;
  auto place = [&](auto&& self, int depth) -> bool {
    if (depth == k) return true;
    if (counter && !counter->tick()) {
      aborted = true;
      return false;
    }
    const Vertex x = sequence[depth];
    Vertex anchor = -1;
    for (Vertex w : f.neighbors(x))
      if (image[w] >= 0) {
        anchor = image[w];
        break;
      }
    auto try_vertex = [&](Vertex y) -> bool {
      if (used[y] || g.degree(y) < f.degree(x)) return false;
      for (Vertex w : f.neighbors(x))
        if (image[w] >= 0 && !g.adjacent(y, image[w])) return false;
      image[x] = y;
      used[y] = 1;
      if (self(self, depth + 1)) return true;
      image[x] = -1;
      used[y] = 0;
      return false;
    };
    if (anchor >= 0) {
      for (Vertex y : g.neighbors(anchor)) {
        if (try_vertex(y)) return true;
        if (aborted) return false;
      }
    } else {
      for (Vertex y = 0; y < g.order(); ++y) {
        if (try_vertex(y)) return true;
        if (aborted) return false;
      }
    }
    return false;
  };
  if (place(place, 0)) return image;
  return std::nullopt;
}

namespace {

// Contracted view of g: block[v] is the branch-set label of original vertex v.
struct Contraction {
  std::vector<int> block;
  int blocks = 0;
};

std::string partition_key(const std::vector<int>& block) {
  std::string key(block.size(), '\0');
  for (std::size_t i = 0; i < block.size(); ++i) key[i] = static_cast<char>(block[i]);
  return key;
}

Graph quotient(const Graph& g, const Contraction& c) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (c.block[e.u] != c.block[e.v]) edges.emplace_back(c.block[e.u], c.block[e.v]);
  }
  return Graph(c.blocks, std::move(edges));
}

// Relabels blocks by order of first appearance so equal partitions share a key.
void canonicalize(Contraction& c) {
  std::vector<int> rename(c.block.size(), -1);
  int next = 0;
  for (int& b : c.block) {
    if (rename[b] < 0) rename[b] = next++;
    b = rename[b];
  }
  c.blocks = next;
}

}  // namespace

MinorResult has_minor(const Graph& g, const Graph& f, SearchBudget budget) {
  MinorResult result;
  const int k = f.order();
  if (k > g.order() || f.size() > g.size()) {
    result.verdict = Verdict::no;
    return result;
  }
  if (g.order() > 127) {
    // Partition keys store labels in a char.
    result.verdict = Verdict::inconclusive;
    return result;
  }
  NodeCounter counter(budget);
  std::unordered_set<std::string> seen;
  Contraction start;
  start.block.resize(g.order());
  std::iota(start.block.begin(), start.block.end(), 0);
  start.blocks = g.order();
  std::optional<MinorModel> model;

  auto search = [&](auto&& self, const Contraction& c) -> void {
    if (model || counter.exhausted()) return;
    if (!counter.tick()) return;
    const Graph q = quotient(g, c);
    if (q.size() < f.size()) return;
    if (auto image = find_subgraph(q, f, &counter)) {
      MinorModel m;
      m.branch_sets.resize(k);
      for (Vertex x = 0; x < k; ++x) {
        for (Vertex v = 0; v < g.order(); ++v)
          if (c.block[v] == (*image)[x]) m.branch_sets[x].push_back(v);
      }
      model = std::move(m);
      return;
    }
    if (c.blocks <= k) return;
    for (const Edge& e : q.edges()) {
      Contraction next = c;
      for (int& b : next.block)
        if (b == e.v) b = e.u;
      canonicalize(next);
      if (!seen.insert(partition_key(next.block)).second) continue;
      self(self, next);
      if (model || counter.exhausted()) return;
    }
  };
  seen.insert(partition_key(start.block));
  search(search, start);
  result.nodes = counter.used();
  if (model) {
    result.verdict = Verdict::yes;
    result.model = std::move(model);
  } else {
    result.verdict = counter.exhausted() ? Verdict::inconclusive : Verdict::no;
  }
  return result;
}

bool is_minor_model(const Graph& g, const Graph& f, const MinorModel& model) {
  if (static_cast<int>(model.branch_sets.size()) != f.order()) return false;
  std::vector<int> owner(g.order(), -1);
  for (int x = 0; x < f.order(); ++x) {
    const auto& set = model.branch_sets[x];
    if (set.empty()) return false;
    for (Vertex v : set) {
      if (v < 0 || v >= g.order() || owner[v] >= 0) return false;
      owner[v] = x;
    }
  }
  for (int x = 0; x < f.order(); ++x) {
    const auto& set = model.branch_sets[x];
    std::vector<char> reached(g.order(), 0);
    std::vector<Vertex> stack{set.front()};
    reached[set.front()] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (owner[w] == x && !reached[w]) {
          reached[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count != set.size()) return false;
  }
  for (const Edge& e : f.edges()) {
    bool linked = false;
    for (Vertex v : model.branch_sets[e.u]) {
      for (Vertex w : g.neighbors(v))
        if (owner[w] == e.v) {
          linked = true;
          break;
        }
      if (linked) break;
    }
    if (!linked) return false;
  }
  return true;
}

}  // namespace minorcolor
