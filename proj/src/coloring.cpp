#include "minorcolor/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "minorcolor/oracles.hpp"

namespace minorcolor {

int Coloring::distinct_colors() const {
  std::set<int> seen(colors.begin(), colors.end());
  return static_cast<int>(seen.size());
}

int Coloring::max_color() const {
  return colors.empty() ? -1 : *std::max_element(colors.begin(), colors.end());
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) return false;
  for (int x : c.colors)
    if (x < 0) return false;
  for (const Edge& e : g.edges())
    if (c.colors[e.u] == c.colors[e.v]) return false;
  return true;
}

Coloring canonical_colors(const Coloring& c) {
  std::unordered_map<int, int> rename;
  Coloring out;
  out.colors.reserve(c.colors.size());
  for (int x : c.colors) {
    auto [it, fresh] = rename.emplace(x, static_cast<int>(rename.size()));
    (void)fresh;
    out.colors.push_back(it->second);
  }
  return out;
}

void ensure_proper(const Graph& g, const Coloring& c, const std::string& producer) {
  if (!is_proper(g, c)) throw std::logic_error(producer + " produced an improper colouring");
}

bool is_valid_set_coloring(const Graph& g, const SetColoring& s) {
  if (s.b < 1 || s.a < s.b || static_cast<int>(s.sets.size()) != g.order()) return false;
  for (const auto& set : s.sets) {
    if (static_cast<int>(set.size()) != s.b) return false;
    std::set<int> distinct(set.begin(), set.end());
    if (static_cast<int>(distinct.size()) != s.b) return false;
    for (int x : set)
      if (x < 1 || x > s.a) return false;
  }
  for (const Edge& e : g.edges()) {
    for (int x : s.sets[e.u])
      if (std::find(s.sets[e.v].begin(), s.sets[e.v].end(), x) != s.sets[e.v].end()) return false;
  }
  return true;
}

Rational FractionalColoring::total() const {
  Rational sum = 0;
  for (const auto& w : weights) sum += w;
  return sum;
}

bool is_valid_fractional_coloring(const Graph& g, const FractionalColoring& f) {
  if (f.sets.size() != f.weights.size()) return false;
  std::vector<Rational> cover(g.order(), Rational(0));
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    if (f.weights[i] < 0) return false;
    for (Vertex v : f.sets[i])
      if (v < 0 || v >= g.order()) return false;
    if (!is_independent(g, f.sets[i])) return false;
    for (Vertex v : f.sets[i]) cover[v] += f.weights[i];
  }
  for (const auto& c : cover)
    if (c < 1) return false;
  return true;
}

Rational FractionalClique::total() const {
  Rational sum = 0;
  for (const auto& w : weights) sum += w;
  return sum;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace minorcolor
