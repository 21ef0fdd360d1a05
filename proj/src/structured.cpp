#include "minorcolor/structured.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "minorcolor/errors.hpp"

namespace minorcolor {

namespace {

bool contains(const std::vector<Vertex>& sorted, Vertex x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

std::vector<Vertex> sorted_copy(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool in_cyclic_order(const std::vector<Vertex>& walk, const std::vector<Vertex>& seq) {
  if (seq.empty()) return true;
  const std::size_t n = walk.size();
  for (std::size_t start = 0; start < n; ++start) {
    if (walk[start] != seq[0]) continue;
    std::size_t k = 1;
    for (std::size_t step = 1; step < n && k < seq.size(); ++step)
      if (walk[(start + step) % n] == seq[k]) ++k;
    if (k == seq.size()) return true;
  }
  return false;
}

// Host edges drawn on the surface of a node.
std::set<Edge> surface_edges(const StructuredNode& node) {
  std::set<Edge> out;
  for (const Edge& e : node.embedding.graph.edges()) out.emplace(node.surface[e.u], node.surface[e.v]);
  return out;
}

}  // namespace

std::vector<Vertex> vortex_vertices(const StructuredVortex& v) {
  std::vector<Vertex> out(v.boundary.begin(), v.boundary.end());
  for (const auto& bag : v.path_bags) out.insert(out.end(), bag.begin(), bag.end());
  if (v.edges)
    for (const Edge& e : *v.edges) {
      out.push_back(e.u);
      out.push_back(e.v);
    }
  return sorted_copy(std::move(out));
}

std::vector<Edge> vortex_edges(const Graph& torso, const StructuredNode& node, const StructuredVortex& v) {
  if (v.edges) return *v.edges;
  const auto drawn = surface_edges(node);
  const auto vs = vortex_vertices(v);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Edge e(vs[i], vs[j]);
      if (torso.adjacent(e.u, e.v) && !drawn.count(e)) out.push_back(e);
    }
  return out;
}

std::vector<std::string> structured_violations(const Graph& g, const StructuredDecomposition& sd) {
  std::vector<std::string> out;
  const auto valid = validate_td(g, sd.td);
  if (auto* bad = std::get_if<std::vector<TdViolation>>(&valid)) {
    for (const auto& v : *bad) out.push_back("tree decomposition: " + v.message);
    return out;
  }
  if (static_cast<int>(sd.nodes.size()) != sd.td.node_count()) {
    out.push_back("structured data given for " + std::to_string(sd.nodes.size()) + " nodes, decomposition has " +
                  std::to_string(sd.td.node_count()));
    return out;
  }
  const Graph torso = torso_expansion(g, sd.td);
  const auto children = sd.td.children();
  for (int v = 0; v < sd.td.node_count(); ++v) {
    const std::string at = "node " + std::to_string(v) + ": ";
    const auto& node = sd.nodes[v];
    const auto& bag = sd.td.bags[v];
    const auto apex = sorted_copy(node.apex);
    const auto inner = sorted_copy(node.inner_apex);
    for (Vertex x : apex)
      if (!contains(bag, x)) out.push_back(at + "apex vertex " + std::to_string(x) + " not in the bag");
    if (static_cast<int>(apex.size()) > sd.a_h) out.push_back(at + "|A_v| exceeds a_H");
    for (Vertex x : sd.td.up(v))
      if (!contains(apex, x)) out.push_back(at + "adhesion vertex " + std::to_string(x) + " not in A_v");
    for (Vertex x : inner)
      if (!contains(apex, x)) out.push_back(at + "inner apex vertex " + std::to_string(x) + " not in A_v");
    if (static_cast<int>(inner.size()) > sd.t - 1) out.push_back(at + "|A'_v| exceeds t-1");

    if (!std::is_sorted(node.surface.begin(), node.surface.end()) ||
        std::adjacent_find(node.surface.begin(), node.surface.end()) != node.surface.end()) {
      out.push_back(at + "surface vertex list must be sorted and distinct");
      continue;
    }
    for (Vertex x : node.surface)
      if (!contains(bag, x) || contains(apex, x)) out.push_back(at + "surface vertex " + std::to_string(x) + " not in bag minus A_v");
    if (node.embedding.graph.order() != static_cast<int>(node.surface.size())) {
      out.push_back(at + "embedding size does not match the surface vertex list");
      continue;
    }
    try {
      validate_embedding(node.embedding);
    } catch (const PreconditionError& e) {
      out.push_back(at + e.what());
      continue;
    }
    for (const Edge& e : surface_edges(node))
      if (!torso.adjacent(e.u, e.v)) out.push_back(at + "embedded edge not in the torso expansion");
    std::vector<Face> faces;
    if (!node.surface.empty()) {
      if (!is_connected(node.embedding.graph)) {
        out.push_back(at + "surface part is disconnected, so the embedding is not 2-cell");
      } else {
        faces = trace_faces(node.embedding);
      }
    }
    std::map<Vertex, int> local;
    for (std::size_t i = 0; i < node.surface.size(); ++i) local[node.surface[i]] = static_cast<int>(i);

    std::map<Vertex, int> owner;
    std::set<int> faces_used;
    for (std::size_t i = 0; i < node.vortices.size(); ++i) {
      const std::string vat = at + "vortex " + std::to_string(i) + ": ";
      const auto& vx = node.vortices[i];
      const auto vs = vortex_vertices(vx);
      for (Vertex x : vs) {
        if (!contains(bag, x) || contains(apex, x)) out.push_back(vat + "vertex " + std::to_string(x) + " not in bag minus A_v");
        if (contains(node.surface, x) && std::find(vx.boundary.begin(), vx.boundary.end(), x) == vx.boundary.end()) {
          out.push_back(vat + "meets the surface at " + std::to_string(x) + " outside its boundary");
        }
        if (!owner.emplace(x, static_cast<int>(i)).second) out.push_back(vat + "not disjoint from another vortex");
      }
      for (Vertex x : vx.boundary)
        if (!contains(node.surface, x)) out.push_back(vat + "boundary vertex " + std::to_string(x) + " is not on the surface");
      if (vx.path_bags.size() != vx.boundary.size()) out.push_back(vat + "needs one path bag per boundary vertex");
      for (std::size_t j = 0; j < std::min(vx.path_bags.size(), vx.boundary.size()); ++j) {
        const auto& pb = vx.path_bags[j];
        if (std::find(pb.begin(), pb.end(), vx.boundary[j]) == pb.end()) out.push_back(vat + "boundary vertex missing from its path bag");
        if (static_cast<int>(pb.size()) > sd.a_h + 1) out.push_back(vat + "path bag larger than a_H + 1");
      }
      // Path decomposition axioms on compact ids.
      std::map<Vertex, int> compact;
      for (Vertex x : vs) compact.emplace(x, static_cast<int>(compact.size()));
      std::vector<Edge> ce;
      for (const Edge& e : vortex_edges(torso, node, vx))
        if (compact.count(e.u) && compact.count(e.v)) ce.emplace_back(compact[e.u], compact[e.v]);
      Vortex check;
      check.graph = Graph(static_cast<int>(compact.size()), ce);
      check.depth = sd.a_h;
      for (Vertex x : vx.boundary) check.boundary.push_back(compact[x]);
      for (const auto& pb : vx.path_bags) {
        std::vector<Vertex> mapped;
        for (Vertex x : pb) mapped.push_back(compact.count(x) ? compact[x] : -1);
        check.path_bags.push_back(std::move(mapped));
      }
      for (const auto& msg : vortex_violations(check)) out.push_back(vat + msg);
      if (vx.face < 0 || vx.face >= static_cast<int>(faces.size())) {
        out.push_back(vat + "face id out of range");
      } else {
        if (!faces_used.insert(vx.face).second) out.push_back(vat + "shares its face with another vortex");
        std::vector<Vertex> walk;
        for (Vertex x : faces[vx.face].vertices()) walk.push_back(node.surface[x]);
        std::vector<Vertex> rev(vx.boundary.rbegin(), vx.boundary.rend());
        if (!in_cyclic_order(walk, vx.boundary) && !in_cyclic_order(walk, rev)) {
          out.push_back(vat + "boundary sequence does not appear in order on its face");
        }
      }
    }
    // Every torso edge off the apex set is drawn or lies in a vortex.
    std::set<Edge> vortex_drawn;
    for (const auto& vx : node.vortices)
      for (const Edge& e : vortex_edges(torso, node, vx)) vortex_drawn.insert(e);
    const auto drawn = surface_edges(node);
    for (Vertex x : bag) {
      if (contains(apex, x)) continue;
      if (!contains(node.surface, x) && !owner.count(x)) {
        out.push_back(at + "vertex " + std::to_string(x) + " is neither on the surface nor in a vortex");
      }
    }
    for (std::size_t i = 0; i < bag.size(); ++i)
      for (std::size_t j = i + 1; j < bag.size(); ++j) {
        const Vertex x = bag[i], y = bag[j];
        if (contains(apex, x) || contains(apex, y) || !torso.adjacent(x, y)) continue;
        const Edge e(x, y);
        if (drawn.count(e) || vortex_drawn.count(e)) continue;
        const auto ox = owner.find(x), oy = owner.find(y);
        if (ox != owner.end() && oy != owner.end() && ox->second != oy->second) {
          out.push_back(at + "torso edge between two vortices (" + std::to_string(x) + "," + std::to_string(y) + ")");
        } else {
          out.push_back(at + "torso edge (" + std::to_string(x) + "," + std::to_string(y) + ") is covered by neither the surface nor a vortex");
        }
      }
    // Surface vertices see only inner apex vertices.
    for (Vertex x : node.surface)
      for (Vertex y : g.neighbors(x))
        if (contains(apex, y) && !contains(inner, y)) {
          out.push_back(at + "surface vertex " + std::to_string(x) + " adjacent to outer apex " + std::to_string(y));
        }
    // A child meeting the surface attaches through surface or inner apex vertices.
    for (int w : children[v]) {
      bool meets = false;
      for (Vertex x : sd.td.bags[w]) meets = meets || contains(node.surface, x);
      if (!meets) continue;
      for (Vertex x : sd.td.up(w))
        if (!contains(node.surface, x) && !contains(inner, x)) {
          out.push_back(at + "adhesion condition fails for child " + std::to_string(w) + " at vertex " + std::to_string(x));
        }
    }
  }
  return out;
}

NormalizedDecomposition normalize_skippable(const Graph& g, const StructuredDecomposition& sd,
                                            const std::vector<Vertex>& core) {
  const auto& td = sd.td;
  const int count = td.node_count();
  if (static_cast<int>(sd.nodes.size()) != count) throw PreconditionError("structured data does not match the tree");
  std::vector<char> in_c(g.order(), 0);
  for (Vertex x : core) in_c[x] = 1;
  const auto children = td.children();
  for (int v = 0; v < count; ++v) {
    const auto& node = sd.nodes[v];
    const auto inner = sorted_copy(node.inner_apex);
    for (int w : children[v]) {
      bool meets = false;
      for (Vertex x : td.bags[w]) meets = meets || contains(node.surface, x);
      if (!meets) continue;
      for (Vertex x : td.up(w))
        if (!contains(node.surface, x) && !contains(inner, x)) {
          throw PreconditionError("adhesion condition violated by node pair (" + std::to_string(v) + ", " + std::to_string(w) +
                                  ") at vertex " + std::to_string(x));
        }
    }
  }
  std::vector<std::vector<Vertex>> reduced(count);
  for (int v = 0; v < count; ++v)
    for (Vertex x : td.bags[v])
      if (in_c[x]) reduced[v].push_back(x);

  NormalizedDecomposition out;
  std::vector<char> skip(count, 0);  // skip[w]: edge parent(w)-w is skippable
  for (int w = 0; w < count; ++w) {
    const int v = td.parent[w];
    if (v < 0) continue;
    bool meets = false;
    for (Vertex x : reduced[w]) meets = meets || contains(sd.nodes[v].surface, x);
    if (!meets) {
      skip[w] = 1;
      out.skippable.emplace_back(v, w);
    }
  }
  out.new_parent.assign(count, -1);
  for (int w = 0; w < count; ++w) {
    if (td.parent[w] < 0) continue;
    int z = w;
    while (td.parent[z] >= 0 && skip[z]) z = td.parent[z];
    if (td.parent[z] >= 0) {
      out.new_parent[w] = td.parent[z];
    } else {
      out.new_parent[w] = td.root;
      ++out.root_fallbacks;
    }
  }
  std::vector<std::vector<Vertex>> bags(count);
  for (int v = 0; v < count; ++v) {
    const int p = td.parent[v];
    for (Vertex x : reduced[v])
      if (p < 0 || !contains(reduced[p], x)) bags[v].push_back(x);
    for (Vertex x : sd.nodes[v].inner_apex)
      if (in_c[x]) bags[v].push_back(x);
  }
  out.td = make_decomposition(out.new_parent, std::move(bags));
  return out;
}

SplitResult split_low_high(const Graph& g, const StructuredDecomposition& sd, std::optional<std::pair<int, int>> kab) {
  if (const auto bad = structured_violations(g, sd); !bad.empty()) {
    std::string msg = "structured decomposition invalid:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw PreconditionError(msg);
  }
  const Graph torso = torso_expansion(g, sd.td);
  SplitResult r;
  std::set<Vertex> low;
  for (int v = 0; v < sd.td.node_count(); ++v) {
    const auto& node = sd.nodes[v];
    NodeLowReport rep;
    rep.node = v;
    rep.vortex_count = static_cast<int>(node.vortices.size());
    const auto up = sd.td.up(v);
    for (Vertex x : node.apex)
      if (!contains(up, x)) {
        low.insert(x);
        ++rep.apex_outside;
      }
    const int k = static_cast<int>(node.surface.size());
    std::map<Vertex, int> local;
    for (int i = 0; i < k; ++i) local[node.surface[i]] = i;
    std::vector<Vortex> vortices;
    int next = k;
    for (const auto& vx : node.vortices) {
      for (Vertex x : vortex_vertices(vx)) {
        low.insert(x);
        if (!local.count(x)) local[x] = next++;
      }
    }
    for (const auto& vx : node.vortices) {
      Vortex lv;
      std::vector<Edge> edges;
      for (const Edge& e : vortex_edges(torso, node, vx)) edges.emplace_back(local[e.u], local[e.v]);
      lv.graph = Graph(next, edges);
      for (Vertex x : vx.boundary) lv.boundary.push_back(local[x]);
      for (const auto& pb : vx.path_bags) {
        std::vector<Vertex> m;
        for (Vertex x : pb) m.push_back(local[x]);
        lv.path_bags.push_back(std::move(m));
      }
      lv.face = vx.face;
      lv.depth = sd.a_h;
      vortices.push_back(std::move(lv));
    }
    if (k > 0) {
      const auto audit = lemma_remove(node.embedding, vortices, sd.a_h);
      rep.genus = audit.genus;
      for (Vertex x : audit.removed) rep.removed.push_back(node.surface[x]);
      rep.lemma_treewidth = audit.treewidth;
      rep.lemma_within_bound = audit.within_bound;
    }
    low.insert(rep.removed.begin(), rep.removed.end());
    if (kab) {
      const auto apex = sorted_copy(node.apex);
      for (Vertex x : node.surface) {
        int hits = 0;
        for (Vertex y : g.neighbors(x)) hits += contains(apex, y) ? 1 : 0;
        if (hits >= kab->first) {
          low.insert(x);
          ++rep.s_size;
        }
      }
    }
    rep.bound = 26 * rep.genus + 9 * rep.vortex_count + sd.a_h + rep.apex_outside + rep.s_size;
    r.low_bound = std::max(r.low_bound, rep.bound);
    r.nodes.push_back(std::move(rep));
  }
  r.low.assign(low.begin(), low.end());
  for (Vertex x = 0; x < g.order(); ++x)
    if (!low.count(x)) r.core.push_back(x);

  auto core_sub = induced_subgraph(g, r.core);
  r.core_graph = core_sub.graph;
  r.core_ids = core_sub.original;
  r.normalized = normalize_skippable(g, sd, r.core);
  std::vector<int> to_local(g.order(), -1);
  for (std::size_t i = 0; i < r.core_ids.size(); ++i) to_local[r.core_ids[i]] = static_cast<int>(i);
  auto bags = r.normalized.td.bags;
  for (auto& b : bags)
    for (Vertex& x : b) x = to_local[x];
  r.core_td = make_decomposition(r.normalized.td.parent, std::move(bags));
  if (!is_valid_td(r.core_graph, r.core_td)) {
    throw LemmaViolation("re-parented decomposition is not a tree decomposition of g[C]");
  }
  r.restricted_a = kab ? kab->first : sd.t;
  r.restricted = is_restricted(r.core_graph, r.core_td, sd.t, r.restricted_a);

  const auto low_sub = induced_subgraph(g, r.low);
  const auto tw = treewidth(low_sub.graph);
  r.low_treewidth = low_sub.graph.order() == 0 ? 0 : tw.value;
  r.low_treewidth_exact = tw.exact;
  r.low_within_bound = r.low_treewidth <= r.low_bound;
  return r;
}

}  // namespace minorcolor
