#include "minorcolor/embedding.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "minorcolor/errors.hpp"
#include "minorcolor/planarity.hpp"
#include "minorcolor/tree_decomposition.hpp"

namespace minorcolor {

RotationEmbedding RotationEmbedding::orientable(Graph g, std::vector<std::vector<Vertex>> rotation) {
  RotationEmbedding e;
  e.signature.assign(g.size(), 1);
  e.graph = std::move(g);
  e.rotation = std::move(rotation);
  return e;
}

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(darts.size());
  for (const Dart& d : darts) out.push_back(d.from);
  return out;
}

void validate_embedding(const RotationEmbedding& e) {
  const Graph& g = e.graph;
  if (static_cast<int>(e.rotation.size()) != g.order()) {
    throw PreconditionError("rotation system must list every vertex");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> sorted = e.rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), g.neighbors(v).begin(), g.neighbors(v).end())) {
      throw PreconditionError("rotation at vertex " + std::to_string(v) +
                              " is not a cyclic order of its neighbours");
    }
  }
  if (e.signature.size() != g.size()) throw PreconditionError("one signature per edge required");
  for (int s : e.signature)
    if (s != 1 && s != -1) throw PreconditionError("edge signatures must be +1 or -1");
}

namespace {

// Position of every neighbour inside each rotation, for O(log d) lookups.
struct RotationIndex {
  std::vector<int> offset;
  std::vector<std::vector<std::pair<Vertex, int>>> pos;

  explicit RotationIndex(const RotationEmbedding& e) : offset(e.graph.order() + 1, 0), pos(e.graph.order()) {
    for (Vertex v = 0; v < e.graph.order(); ++v) {
      offset[v + 1] = offset[v] + static_cast<int>(e.rotation[v].size());
      for (int i = 0; i < static_cast<int>(e.rotation[v].size()); ++i) pos[v].emplace_back(e.rotation[v][i], i);
      std::sort(pos[v].begin(), pos[v].end());
    }
  }
  int index(Vertex v, Vertex w) const {
    auto it = std::lower_bound(pos[v].begin(), pos[v].end(), std::make_pair(w, -1));
    return it->second;
  }
};

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

std::vector<Face> trace_faces(const RotationEmbedding& e) {
  validate_embedding(e);
  const Graph& g = e.graph;
  RotationIndex idx(e);
  const int darts = idx.offset[g.order()];
  // State = (dart, orientation); each face appears as two mutually reverse
  // orbits, and the reverse orbit is marked while tracing the forward one.
  std::vector<char> seen(2 * static_cast<std::size_t>(darts), 0);
  auto state = [&](Vertex v, int i, int s) { return 2 * (idx.offset[v] + i) + (s < 0 ? 1 : 0); };
  std::vector<Face> faces;
  for (int s0 : {1, -1}) {
    for (Vertex v0 = 0; v0 < g.order(); ++v0) {
      for (int i0 = 0; i0 < static_cast<int>(e.rotation[v0].size()); ++i0) {
        if (seen[state(v0, i0, s0)]) continue;
        Face face;
        Vertex v = v0;
        int i = i0, s = s0;
        do {
          seen[state(v, i, s)] = 1;
          const Vertex w = e.rotation[v][i];
          face.darts.push_back({v, w});
          face.orientation.push_back(s);
          const int s2 = s * e.signature[g.edge_index(v, w)];
          const int j = idx.index(w, v);
          seen[state(w, j, -s2)] = 1;
          v = w;
          i = mod(j + s2, static_cast<int>(e.rotation[w].size()));
          s = s2;
        } while (!(v == v0 && i == i0 && s == s0));
        faces.push_back(std::move(face));
      }
    }
  }
  return faces;
}

int euler_genus(const RotationEmbedding& e) {
  if (!is_connected(e.graph)) throw PreconditionError("euler genus needs a connected (2-cell) embedding");
  if (e.graph.size() == 0) return 0;
  const int faces = static_cast<int>(trace_faces(e).size());
  return 2 - e.graph.order() + static_cast<int>(e.graph.size()) - faces;
}

bool is_spherical(const RotationEmbedding& e) {
  const auto comps = connected_components(e.graph);
  int isolated = 0;
  for (const auto& c : comps)
    if (c.size() == 1) ++isolated;
  const int faces = static_cast<int>(trace_faces(e).size()) + isolated;
  return e.graph.order() - static_cast<int>(e.graph.size()) + faces == 2 * static_cast<int>(comps.size());
}

RotationEmbedding restrict_embedding(const RotationEmbedding& e, const std::vector<Edge>& keep) {
  RotationEmbedding out;
  out.graph = Graph(e.graph.order(), keep);
  out.rotation.resize(e.graph.order());
  for (Vertex v = 0; v < e.graph.order(); ++v)
    for (Vertex w : e.rotation[v])
      if (out.graph.adjacent(v, w)) out.rotation[v].push_back(w);
  out.signature.reserve(out.graph.size());
  for (const Edge& ed : out.graph.edges()) {
    const int idx = e.graph.edge_index(ed.u, ed.v);
    if (idx < 0) throw PreconditionError("restricted edge is not an edge of the embedding");
    out.signature.push_back(e.signature[idx]);
  }
  return out;
}

RotationEmbedding relabel_embedding(const RotationEmbedding& e, const std::vector<Vertex>& perm) {
  RotationEmbedding out;
  out.graph = relabel(e.graph, perm);
  out.rotation.resize(e.graph.order());
  for (Vertex v = 0; v < e.graph.order(); ++v)
    for (Vertex w : e.rotation[v]) out.rotation[perm[v]].push_back(perm[w]);
  out.signature.assign(out.graph.size(), 1);
  for (std::size_t i = 0; i < e.graph.size(); ++i) {
    const Edge& ed = e.graph.edges()[i];
    out.signature[out.graph.edge_index(perm[ed.u], perm[ed.v])] = e.signature[i];
  }
  return out;
}

std::vector<std::string> vortex_violations(const Vortex& v) {
  std::vector<std::string> out;
  if (v.path_bags.size() != v.boundary.size()) {
    out.push_back("vortex needs one path bag per boundary vertex");
    return out;
  }
  for (std::size_t i = 0; i < v.boundary.size(); ++i) {
    const auto& bag = v.path_bags[i];
    if (std::find(bag.begin(), bag.end(), v.boundary[i]) == bag.end()) {
      out.push_back("boundary vertex " + std::to_string(v.boundary[i]) + " missing from path bag " + std::to_string(i));
    }
    if (static_cast<int>(bag.size()) > v.depth + 1) {
      out.push_back("path bag " + std::to_string(i) + " exceeds depth " + std::to_string(v.depth));
    }
  }
  std::vector<std::vector<Vertex>> bags = v.path_bags;
  std::vector<int> parent(bags.size());
  for (std::size_t i = 0; i < bags.size(); ++i) parent[i] = static_cast<int>(i) - 1;
  if (bags.empty()) return out;
  for (const auto& bag : bags)
    for (Vertex x : bag)
      if (x < 0 || x >= v.graph.order()) out.push_back("path bag names unknown vertex " + std::to_string(x));
  if (!out.empty()) return out;
  const auto td = make_decomposition(parent, bags);
  // Vertices of the vortex graph are those named by a bag or an edge.
  std::set<Vertex> named;
  for (const auto& bag : bags) named.insert(bag.begin(), bag.end());
  for (const Edge& e : v.graph.edges()) {
    named.insert(e.u);
    named.insert(e.v);
  }
  std::vector<Vertex> members(named.begin(), named.end());
  const auto sub = induced_subgraph(v.graph, members);
  std::vector<int> local(v.graph.order(), -1);
  for (std::size_t i = 0; i < sub.original.size(); ++i) local[sub.original[i]] = static_cast<int>(i);
  RootedTreeDecomposition relabeled = td;
  for (auto& bag : relabeled.bags) {
    for (Vertex& x : bag) x = local[x];
    std::sort(bag.begin(), bag.end());
  }
  const auto result = validate_td(sub.graph, relabeled);
  if (auto* violations = std::get_if<std::vector<TdViolation>>(&result)) {
    for (const auto& tv : *violations) out.push_back("vortex path decomposition: " + tv.message + " (local ids)");
  }
  return out;
}

namespace {

// One-face subgraph under construction inside a host embedding.
class FaceReducer {
 public:
  explicit FaceReducer(const RotationEmbedding& host) : host_(host), alive_(host.graph.size(), 1) {}

  RotationEmbedding current() const { return restrict_embedding(host_, alive_edges()); }

  std::vector<Edge> alive_edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < alive_.size(); ++i)
      if (alive_[i]) out.push_back(host_.graph.edges()[i]);
    return out;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(host_.graph.order(), 0);
    for (std::size_t i = 0; i < alive_.size(); ++i) {
      if (!alive_[i]) continue;
      ++d[host_.graph.edges()[i].u];
      ++d[host_.graph.edges()[i].v];
    }
    return d;
  }

  int weight() const {
    int v = 0;
    for (int d : degrees())
      if (d > 0) ++v;
    int e = 0;
    for (char a : alive_) e += a;
    return v + e;
  }

  // Edges whose two sides lie on different faces, ascending by host index.
  std::vector<int> separating_edges() const {
    const auto emb = current();
    const auto faces = trace_faces(emb);
    std::map<int, std::set<int>> sides;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
      for (const Dart& d : faces[f].darts) sides[host_.graph.edge_index(d.from, d.to)].insert(f);
    std::vector<int> out;
    for (const auto& [edge, fs] : sides)
      if (fs.size() > 1) out.push_back(edge);
    return out;
  }

  int face_count() const { return static_cast<int>(trace_faces(current()).size()); }

  void prune_leaves() {
    bool changed = true;
    while (changed) {
      changed = false;
      const auto d = degrees();
      for (std::size_t i = 0; i < alive_.size(); ++i) {
        if (!alive_[i]) continue;
        const Edge& e = host_.graph.edges()[i];
        if (d[e.u] == 1 || d[e.v] == 1) {
          alive_[i] = 0;
          changed = true;
          break;
        }
      }
    }
  }

  void reduce_to_one_face() {
    while (true) {
      const auto sep = separating_edges();
      if (sep.empty()) break;
      alive_[sep.front()] = 0;
      prune_leaves();
    }
  }

  // Adds the host path `path` (consecutive vertices), then deletes an edge
  // of the subgraph at either end separating the two new faces and prunes.
  // Keeps the change only if the result is one face and strictly lighter.
  bool apply_ear(const std::vector<Vertex>& path) {
    const auto saved = alive_;
    const int before = weight();
    std::vector<int> incident;
    for (Vertex end : {path.front(), path.back()}) {
      for (Vertex w : host_.graph.neighbors(end)) {
        const int id = host_.graph.edge_index(end, w);
        if (alive_[id]) incident.push_back(id);
      }
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const int id = host_.graph.edge_index(path[i], path[i + 1]);
      if (id < 0) {
        alive_ = saved;
        return false;
      }
      alive_[id] = 1;
    }
    const auto sep = separating_edges();
    for (int id : incident) {
      if (!std::binary_search(sep.begin(), sep.end(), id)) continue;
      alive_[id] = 0;
      prune_leaves();
      if (face_count() == 1 && weight() < before) return true;
      alive_ = saved;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) alive_[host_.graph.edge_index(path[i], path[i + 1])] = 1;
    }
    alive_ = saved;
    return false;
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    const auto d = degrees();
    for (Vertex v = 0; v < host_.graph.order(); ++v)
      if (d[v] > 0) out.push_back(v);
    return out;
  }

  bool has_edge(Vertex a, Vertex b) const {
    const int id = host_.graph.edge_index(a, b);
    return id >= 0 && alive_[id];
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : host_.graph.neighbors(v))
      if (has_edge(v, w)) out.push_back(w);
    return out;
  }

  const RotationEmbedding& host() const { return host_; }

 private:
  const RotationEmbedding& host_;
  std::vector<char> alive_;
};

// Vertices of F of degree >= 3 and their F-neighbours.
std::set<Vertex> branch_closure(const FaceReducer& f) {
  std::set<Vertex> m0;
  const auto d = f.degrees();
  for (Vertex v = 0; v < static_cast<Vertex>(d.size()); ++v) {
    if (d[v] < 3) continue;
    m0.insert(v);
    for (Vertex w : f.neighbors(v)) m0.insert(w);
  }
  return m0;
}

// F-distance <= radius from a vertex of F-degree > 2.
std::set<Vertex> near_branch(const FaceReducer& f, int radius) {
  const auto d = f.degrees();
  std::vector<int> dist(d.size(), -1);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < static_cast<Vertex>(d.size()); ++v)
    if (d[v] > 2) {
      dist[v] = 0;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (dist[v] == radius) continue;
    for (Vertex w : f.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  std::set<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(d.size()); ++v)
    if (dist[v] >= 0) out.insert(v);
  return out;
}

struct Attachment {
  Vertex hub = -1;
  std::vector<Vertex> boundary;  // host ids of V(G_i) cap V(G_0)
};

// Walks `steps` vertices along F from x away from `from`; F has degree 2 there.
std::vector<Vertex> walk(const FaceReducer& f, Vertex from, Vertex x, int steps) {
  std::vector<Vertex> out;
  Vertex prev = from, cur = x;
  for (int i = 0; i < steps; ++i) {
    const auto nb = f.neighbors(cur);
    Vertex next = -1;
    for (Vertex w : nb)
      if (w != prev) next = w;
    if (next < 0) break;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  return out;
}

// One reduction step from the minimality argument; false if none applies.
bool reduce_once(FaceReducer& f, const std::vector<Attachment>& attachments) {
  const auto& host = f.host().graph;
  const auto in_f = [&]() {
    std::vector<char> mark(host.order(), 0);
    for (Vertex v : f.vertices()) mark[v] = 1;
    return mark;
  }();
  // Vertices off the branch structure must see only their two F-neighbours.
  const auto m0 = branch_closure(f);
  for (Vertex x : f.vertices()) {
    if (m0.count(x)) continue;
    for (Vertex z : host.neighbors(x)) {
      if (!in_f[z] || f.has_edge(x, z)) continue;
      if (f.apply_ear({x, z})) return true;
    }
  }
  // At most nine attachment-adjacent vertices per vortex far from branches.
  const auto m1 = near_branch(f, 4);
  for (const auto& att : attachments) {
    std::vector<Vertex> outside;
    for (Vertex b : att.boundary)
      if (!in_f[b]) outside.push_back(b);
    std::vector<Vertex> n_i;
    for (Vertex x : f.vertices()) {
      if (m1.count(x)) continue;
      for (Vertex b : outside)
        if (host.adjacent(x, b)) {
          n_i.push_back(x);
          break;
        }
    }
    if (n_i.size() < 10) continue;
    for (Vertex x : n_i) {
      const auto nb = f.neighbors(x);
      if (nb.size() != 2) continue;
      std::vector<Vertex> near{x};
      for (Vertex side : nb) {
        near.push_back(side);
        for (Vertex w : walk(f, x, side, 3)) near.push_back(w);
      }
      Vertex b = -1;
      for (Vertex c : outside)
        if (host.adjacent(x, c)) {
          b = c;
          break;
        }
      std::vector<std::vector<Vertex>> ears;
      if (in_f[att.hub]) {
        ears.push_back({x, b, att.hub});
      } else {
        for (Vertex z : n_i) {
          if (std::find(near.begin(), near.end(), z) != near.end()) continue;
          for (Vertex c : outside) {
            if (host.adjacent(x, c) && host.adjacent(z, c)) ears.push_back({x, c, z});
          }
          for (Vertex c : outside) {
            if (!host.adjacent(z, c)) continue;
            if (c != b) ears.push_back({x, b, att.hub, c, z});
          }
        }
      }
      for (const auto& ear : ears)
        if (f.apply_ear(ear)) return true;
    }
  }
  return false;
}

// Empty when every vertex of F outside M0 sees only its two F-neighbours in
// V(F) and every |N_i| <= 9; otherwise the first failure.
std::string unreduced(const FaceReducer& f, const std::vector<Attachment>& attachments) {
  const auto& host = f.host().graph;
  std::vector<char> in_f(host.order(), 0);
  for (Vertex v : f.vertices()) in_f[v] = 1;
  const auto m0 = branch_closure(f);
  for (Vertex x : f.vertices()) {
    if (m0.count(x)) continue;
    int seen = 0;
    for (Vertex z : host.neighbors(x)) seen += in_f[z];
    if (seen > 2) return "vertex " + std::to_string(x) + " outside M0 has " + std::to_string(seen) + " neighbours in V(F)";
  }
  const auto m1 = near_branch(f, 4);
  for (std::size_t i = 0; i < attachments.size(); ++i) {
    int count = 0;
    for (Vertex x : f.vertices()) {
      if (m1.count(x)) continue;
      for (Vertex b : attachments[i].boundary)
        if (!in_f[b] && host.adjacent(x, b)) {
          ++count;
          break;
        }
    }
    if (count > 9) return "|N_" + std::to_string(i + 1) + "| = " + std::to_string(count) + " > 9";
  }
  return {};
}

OneFaceSubgraph finish(const FaceReducer& f, int genus, int reductions) {
  OneFaceSubgraph out;
  out.vertices = f.vertices();
  out.edges = f.alive_edges();
  out.embedding = f.current();
  out.genus = genus;
  out.reductions = reductions;
  return out;
}

OneFaceSubgraph reduce(const RotationEmbedding& host, const std::vector<Attachment>& attachments, int genus) {
  FaceReducer f(host);
  f.reduce_to_one_face();
  int reductions = 0;
  const int cap = static_cast<int>(host.graph.size());
  while (reduce_once(f, attachments)) {
    if (++reductions > cap) throw LemmaViolation("one-face post-reduction did not terminate within |E| steps");
  }
  if (const auto why = unreduced(f, attachments); !why.empty()) {
    throw LemmaViolation("one-face subgraph not reducible further but " + why);
  }
  return finish(f, genus, reductions);
}

}  // namespace

OneFaceSubgraph one_face_subgraph(const RotationEmbedding& e) {
  validate_embedding(e);
  const int genus = euler_genus(e);
  if (genus == 0) throw PreconditionError("one-face subgraph is only defined for Euler genus >= 1");
  auto out = reduce(e, {}, genus);
  const int faces = static_cast<int>(trace_faces(out.embedding).size());
  const int sub_genus = 2 - static_cast<int>(out.vertices.size()) + static_cast<int>(out.edges.size()) - faces;
  if (!is_connected(induced_subgraph(Graph(e.graph.order(), out.edges), out.vertices).graph) || sub_genus != genus) {
    throw LemmaViolation("one-face reduction changed the Euler genus");
  }
  return out;
}

namespace {

bool cyclic_subsequence(const std::vector<Vertex>& walk, const std::vector<Vertex>& seq) {
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

// Inserts hub vertices inside the vortex faces. Hub i gets id n0 + i.
RotationEmbedding add_hubs(const RotationEmbedding& g0, const std::vector<Face>& faces,
                           const std::vector<Vortex>& vortices, std::vector<Attachment>& attachments) {
  const int n0 = g0.graph.order();
  const int m = static_cast<int>(vortices.size());
  std::vector<std::vector<Vertex>> rotation = g0.rotation;
  rotation.resize(n0 + m);
  std::vector<Edge> edges = g0.graph.edges();
  std::map<Edge, int> signs;
  for (std::size_t i = 0; i < edges.size(); ++i) signs[edges[i]] = g0.signature[i];
  for (int i = 0; i < m; ++i) {
    const Vertex hub = n0 + i;
    const Face& face = faces[vortices[i].face];
    Attachment att{hub, {}};
    std::set<Vertex> wanted;
    for (Vertex x = 0; x < std::min(n0, vortices[i].graph.order()); ++x) {
      bool used = vortices[i].graph.degree(x) > 0;
      for (const auto& bag : vortices[i].path_bags)
        if (std::find(bag.begin(), bag.end(), x) != bag.end()) used = true;
      if (used) wanted.insert(x);
    }
    for (std::size_t k = 0; k < face.darts.size(); ++k) {
      const Vertex b = face.darts[k].from;
      if (!wanted.count(b)) continue;
      wanted.erase(b);
      const int s = face.orientation[k];
      auto& rot = rotation[b];
      const auto at = std::find(rot.begin(), rot.end(), face.darts[k].to) - rot.begin();
      rot.insert(rot.begin() + (s > 0 ? at : at + 1), hub);
      rotation[hub].push_back(b);
      edges.emplace_back(b, hub);
      signs[Edge(b, hub)] = s;
      att.boundary.push_back(b);
    }
    // Entering the hub from b, the walk must continue to the attachment
    // before b, so the hub rotation runs against the face walk.
    std::reverse(rotation[hub].begin(), rotation[hub].end());
    attachments.push_back(std::move(att));
  }
  RotationEmbedding out;
  out.graph = Graph(n0 + m, edges);
  out.rotation = std::move(rotation);
  for (const Edge& e : out.graph.edges()) out.signature.push_back(signs.at(e));
  return out;
}

}  // namespace

RemovalAudit lemma_remove(const RotationEmbedding& g0, const std::vector<Vortex>& vortices, int depth_bound) {
  RemovalAudit audit;
  validate_embedding(g0);
  const int n0 = g0.graph.order();
  auto& problems = audit.precondition_violations;
  if (!is_connected(g0.graph)) problems.push_back("embedded graph is not connected, so not 2-cell");
  const auto faces = problems.empty() ? trace_faces(g0) : std::vector<Face>{};
  std::set<int> used_faces;
  std::map<Vertex, int> owner;
  for (int i = 0; i < static_cast<int>(vortices.size()); ++i) {
    const Vortex& v = vortices[i];
    const std::string tag = "vortex " + std::to_string(i) + ": ";
    for (const auto& msg : vortex_violations(v)) problems.push_back(tag + msg);
    if (v.depth > depth_bound) problems.push_back(tag + "depth exceeds the bound a");
    if (v.face < 0 || v.face >= static_cast<int>(faces.size())) {
      problems.push_back(tag + "attachment face id out of range");
      continue;
    }
    if (!used_faces.insert(v.face).second) problems.push_back(tag + "shares its face with another vortex");
    const auto walk_vertices = faces[v.face].vertices();
    const std::set<Vertex> on_face(walk_vertices.begin(), walk_vertices.end());
    std::set<Vertex> members;
    for (const auto& bag : v.path_bags) members.insert(bag.begin(), bag.end());
    for (const Edge& e : v.graph.edges()) {
      members.insert(e.u);
      members.insert(e.v);
    }
    for (Vertex x : members) {
      if (!owner.emplace(x, i).second) problems.push_back(tag + "not vertex-disjoint from another vortex");
      if (x < n0 && !on_face.count(x)) {
        problems.push_back(tag + "meets G0 at vertex " + std::to_string(x) + " off its face boundary");
      }
      if (x < n0 && std::find(v.boundary.begin(), v.boundary.end(), x) == v.boundary.end()) {
        problems.push_back(tag + "meets G0 at vertex " + std::to_string(x) + " outside its boundary sequence");
      }
    }
    std::vector<Vertex> reversed(v.boundary.rbegin(), v.boundary.rend());
    if (!cyclic_subsequence(walk_vertices, v.boundary) && !cyclic_subsequence(walk_vertices, reversed)) {
      problems.push_back(tag + "boundary sequence does not appear in order along its face");
    }
  }
  if (!problems.empty()) {
    std::string msg = "lemma_remove preconditions violated:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw PreconditionError(msg);
  }

  audit.genus = euler_genus(g0);
  audit.vortex_count = static_cast<int>(vortices.size());
  audit.depth_bound = depth_bound;
  audit.bound = 26 * audit.genus + 9 * audit.vortex_count + depth_bound;

  if (audit.genus > 0) {
    std::vector<Attachment> attachments;
    const auto augmented = add_hubs(g0, faces, vortices, attachments);
    if (euler_genus(augmented) != audit.genus) {
      throw LemmaViolation("hub insertion changed the Euler genus of the embedding");
    }
    const auto f = reduce(augmented, attachments, audit.genus);
    audit.reductions = f.reductions;
    for (Vertex v : f.vertices)
      if (v < n0) audit.removed.push_back(v);
    // Report M0, M1 and N_i for the final subgraph.
    std::vector<int> deg(augmented.graph.order(), 0);
    for (const Edge& e : f.edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    std::set<Vertex> m0;
    for (const Edge& e : f.edges) {
      if (deg[e.u] >= 3) m0.insert({e.u, e.v});
      if (deg[e.v] >= 3) m0.insert({e.u, e.v});
    }
    for (Vertex v = 0; v < augmented.graph.order(); ++v)
      if (deg[v] >= 3) m0.insert(v);
    audit.m0 = static_cast<int>(m0.size());
    const Graph fg(augmented.graph.order(), f.edges);
    std::vector<int> dist(fg.order(), -1);
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < fg.order(); ++v)
      if (deg[v] > 2) {
        dist[v] = 0;
        queue.push_back(v);
      }
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      if (dist[v] == 4) continue;
      for (Vertex w : fg.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    std::vector<char> in_f(fg.order(), 0);
    for (Vertex v : f.vertices) in_f[v] = 1;
    for (Vertex v = 0; v < fg.order(); ++v)
      if (dist[v] >= 0) ++audit.m1;
    for (const auto& att : attachments) {
      int count = 0;
      for (Vertex x : f.vertices) {
        if (dist[x] >= 0) continue;
        for (Vertex b : att.boundary)
          if (!in_f[b] && augmented.graph.adjacent(x, b)) {
            ++count;
            break;
          }
      }
      audit.n_sizes.push_back(count);
    }
  }

  audit.residual_planar = is_planar(remove_vertices(g0.graph, audit.removed));

  // G0[L0] together with the vortices, on the shared id space.
  int total = n0;
  for (const auto& v : vortices) total = std::max(total, v.graph.order());
  std::vector<Edge> edges;
  std::set<Vertex> members(audit.removed.begin(), audit.removed.end());
  const std::set<Vertex> low(audit.removed.begin(), audit.removed.end());
  for (const Edge& e : g0.graph.edges())
    if (low.count(e.u) && low.count(e.v)) edges.push_back(e);
  for (const auto& v : vortices) {
    for (const Edge& e : v.graph.edges()) {
      edges.push_back(e);
      members.insert({e.u, e.v});
    }
    for (const auto& bag : v.path_bags) members.insert(bag.begin(), bag.end());
  }
  const Graph combined(total, edges);
  const std::vector<Vertex> keep(members.begin(), members.end());
  const auto sub = induced_subgraph(combined, keep);
  const auto tw = treewidth(sub.graph);
  audit.treewidth = sub.graph.order() == 0 ? 0 : tw.value;
  audit.treewidth_exact = tw.exact;
  audit.within_bound = audit.treewidth <= audit.bound;
  return audit;
}

}  // namespace minorcolor
