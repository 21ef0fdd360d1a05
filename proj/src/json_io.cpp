#include "minorcolor/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include "minorcolor/errors.hpp"
#include "minorcolor/graph_io.hpp"

namespace minorcolor {

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

namespace {

std::vector<Edge> edges_from(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw PreconditionError("edges must be [u, v] pairs");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

json edges_to(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

json graph_to_json(const Graph& g) { return {{"n", g.order()}, {"edges", edges_to(g.edges())}}; }

Graph graph_from_json(const json& j) {
  return Graph(j.at("n").get<int>(), edges_from(j.value("edges", json::array())));
}

json ordered_graph_to_json(const OrderedGraph& g) {
  json j = graph_to_json(g.graph);
  j["order"] = g.order;
  return j;
}

OrderedGraph ordered_graph_from_json(const json& j) {
  Graph g = graph_from_json(j);
  if (j.contains("order")) return OrderedGraph(std::move(g), j.at("order").get<std::vector<Vertex>>());
  return OrderedGraph(std::move(g));
}

json coloring_to_json(const Coloring& c) { return c.colors; }

Coloring coloring_from_json(const json& j) { return Coloring{j.get<std::vector<int>>()}; }

json td_to_json(const RootedTreeDecomposition& td) {
  json nodes = json::array();
  for (int z = 0; z < td.node_count(); ++z) nodes.push_back({{"id", z}, {"bag", td.bags[z]}, {"parent", td.parent[z]}});
  return {{"nodes", nodes}, {"root", td.root}};
}

RootedTreeDecomposition td_from_json(const json& j) {
  const auto& nodes = j.at("nodes");
  const int count = static_cast<int>(nodes.size());
  std::vector<int> parent(count, -1);
  std::vector<std::vector<Vertex>> bags(count);
  std::vector<char> seen(count, 0);
  for (const auto& node : nodes) {
    const int id = node.at("id").get<int>();
    if (id < 0 || id >= count || seen[id]) throw PreconditionError("node ids must be 0..N-1, each once");
    seen[id] = 1;
    bags[id] = node.at("bag").get<std::vector<Vertex>>();
    const auto& p = node.contains("parent") ? node.at("parent") : json();
    parent[id] = p.is_null() ? -1 : p.get<int>();
  }
  auto td = make_decomposition(std::move(parent), std::move(bags));
  if (j.contains("root") && j.at("root").get<int>() != td.root) throw PreconditionError("declared root has a parent");
  return td;
}

json embedding_to_json(const RotationEmbedding& e) {
  json rot = json::object();
  for (Vertex v = 0; v < e.graph.order(); ++v) rot[std::to_string(v)] = e.rotation[v];
  json sig = json::object();
  for (std::size_t i = 0; i < e.graph.size(); ++i)
    if (e.signature[i] != 1) {
      const Edge& ed = e.graph.edges()[i];
      sig[std::to_string(ed.u) + "-" + std::to_string(ed.v)] = e.signature[i];
    }
  return {{"n", e.graph.order()}, {"rotation", rot}, {"signature", sig}};
}

namespace {

Edge parse_edge_key(const std::string& key) {
  const auto dash = key.find('-');
  if (dash == std::string::npos) throw PreconditionError("signature key '" + key + "' is not of the form u-v");
  return Edge(std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1)));
}

// Rotation keyed by arbitrary vertex ids, mapped through `local`.
RotationEmbedding embedding_with_ids(const json& j, const std::map<Vertex, int>& local, int n) {
  std::vector<std::vector<Vertex>> rotation(n);
  std::set<Edge> edges;
  for (const auto& [key, list] : j.at("rotation").items()) {
    const int v = local.at(std::stoi(key));
    for (const auto& w : list) {
      const auto it = local.find(w.get<int>());
      if (it == local.end()) throw PreconditionError("rotation at " + key + " names a vertex without a rotation");
      rotation[v].push_back(it->second);
      if (it->second == v) throw PreconditionError("rotation at " + key + " contains a loop");
      edges.emplace(v, it->second);
    }
  }
  RotationEmbedding e;
  e.graph = Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
  e.rotation = std::move(rotation);
  e.signature.assign(e.graph.size(), 1);
  if (j.contains("signature")) {
    for (const auto& [key, s] : j.at("signature").items()) {
      const Edge raw = parse_edge_key(key);
      const int idx = e.graph.edge_index(local.at(raw.u), local.at(raw.v));
      if (idx < 0) throw PreconditionError("signature given for non-edge " + key);
      e.signature[idx] = s.get<int>();
    }
  }
  validate_embedding(e);
  return e;
}

}  // namespace

Graph read_graph_file(const std::filesystem::path& path) {
  if (path.extension() == ".json") return graph_from_json(read_json_file(path));
  return read_dimacs_file(path);
}

OrderedGraph read_ordered_graph_file(const std::filesystem::path& path) {
  if (path.extension() == ".json") return ordered_graph_from_json(read_json_file(path));
  return OrderedGraph(read_dimacs_file(path));
}

RotationEmbedding embedding_from_json(const json& j) {
  int n = 0;
  for (const auto& [key, list] : j.at("rotation").items()) {
    n = std::max(n, std::stoi(key) + 1);
    for (const auto& w : list) n = std::max(n, w.get<int>() + 1);
  }
  if (j.contains("n")) {
    const int declared = j.at("n").get<int>();
    if (declared < n) throw PreconditionError("embedding names vertices beyond n");
    n = declared;
  }
  std::map<Vertex, int> identity;
  for (int v = 0; v < n; ++v) identity[v] = v;
  return embedding_with_ids(j, identity, n);
}

RemovalInstance removal_instance_from_json(const json& j) {
  RemovalInstance r;
  r.g0 = embedding_from_json(j.at("embedding"));
  r.a = j.value("a", 0);
  const int n0 = r.g0.graph.order();
  for (const auto& vj : j.value("vortices", json::array())) {
    Vortex v;
    v.boundary = vj.at("boundary").get<std::vector<Vertex>>();
    v.path_bags = vj.at("path_bags").get<std::vector<std::vector<Vertex>>>();
    v.face = vj.at("face").get<int>();
    v.depth = vj.value("depth", r.a);
    const auto edges = edges_from(vj.value("edges", json::array()));
    int n = n0;
    for (const auto& bag : v.path_bags)
      for (Vertex x : bag) n = std::max(n, x + 1);
    for (const Edge& e : edges) n = std::max(n, e.v + 1);
    v.graph = Graph(n, edges);
    r.vortices.push_back(std::move(v));
  }
  return r;
}

StructuredDecomposition structured_from_json(const json& j) {
  StructuredDecomposition sd;
  sd.td = td_from_json(j);
  sd.t = j.at("t").get<int>();
  sd.a_h = j.at("a_H").get<int>();
  sd.nodes.resize(sd.td.node_count());
  for (const auto& nj : j.at("nodes")) {
    auto& node = sd.nodes[nj.at("id").get<int>()];
    node.apex = nj.value("apex", std::vector<Vertex>{});
    node.inner_apex = nj.value("inner_apex", std::vector<Vertex>{});
    std::sort(node.apex.begin(), node.apex.end());
    std::sort(node.inner_apex.begin(), node.inner_apex.end());
    if (nj.contains("embedding") && !nj.at("embedding").is_null()) {
      const auto& ej = nj.at("embedding");
      for (const auto& [key, list] : ej.at("rotation").items()) node.surface.push_back(std::stoi(key));
      std::sort(node.surface.begin(), node.surface.end());
      std::map<Vertex, int> local;
      for (std::size_t i = 0; i < node.surface.size(); ++i) local[node.surface[i]] = static_cast<int>(i);
      node.embedding = embedding_with_ids(ej, local, static_cast<int>(node.surface.size()));
    }
    for (const auto& vj : nj.value("vortices", json::array())) {
      StructuredVortex v;
      v.boundary = vj.at("boundary").get<std::vector<Vertex>>();
      v.path_bags = vj.at("path_bags").get<std::vector<std::vector<Vertex>>>();
      v.face = vj.at("face").get<int>();
      if (vj.contains("edges")) v.edges = edges_from(vj.at("edges"));
      node.vortices.push_back(std::move(v));
    }
  }
  return sd;
}

json structured_to_json(const StructuredDecomposition& sd) {
  json j = td_to_json(sd.td);
  j["t"] = sd.t;
  j["a_H"] = sd.a_h;
  for (int z = 0; z < sd.td.node_count(); ++z) {
    const auto& node = sd.nodes[z];
    auto& nj = j["nodes"][z];
    nj["apex"] = node.apex;
    nj["inner_apex"] = node.inner_apex;
    json rot = json::object();
    for (std::size_t i = 0; i < node.surface.size(); ++i) {
      std::vector<Vertex> around;
      for (Vertex w : node.embedding.rotation[i]) around.push_back(node.surface[w]);
      rot[std::to_string(node.surface[i])] = around;
    }
    json sig = json::object();
    for (std::size_t i = 0; i < node.embedding.graph.size(); ++i) {
      if (node.embedding.signature[i] == 1) continue;
      const Edge& e = node.embedding.graph.edges()[i];
      sig[std::to_string(node.surface[e.u]) + "-" + std::to_string(node.surface[e.v])] = node.embedding.signature[i];
    }
    nj["embedding"] = {{"rotation", rot}, {"signature", sig}};
    json vs = json::array();
    for (const auto& v : node.vortices) {
      json vj = {{"boundary", v.boundary}, {"path_bags", v.path_bags}, {"face", v.face}};
      if (v.edges) vj["edges"] = edges_to(*v.edges);
      vs.push_back(vj);
    }
    nj["vortices"] = vs;
  }
  return j;
}

json tree_product_to_json(const TreeProduct& tp) {
  json nodes = json::array();
  for (int t = 0; t < tp.node_count(); ++t) {
    json children = json::array();
    for (Vertex v = 0; v < tp.n; ++v) {
      const int c = tp.child_node(t, v);
      children.push_back(c < 0 ? json() : json(c));
    }
    nodes.push_back({{"id", t}, {"parent", tp.node_parent[t]}, {"depth", tp.node_depth[t]}, {"children", children}});
  }
  json copy_of = json::array(), level = json::array(), progenitors = json::array();
  for (Vertex z = 0; z < tp.product.order(); ++z) {
    copy_of.push_back({tp.node_of(z), tp.base_of(z)});
    level.push_back(tp.level(z));
    progenitors.push_back(tp.progenitors(z));
  }
  return {{"n", tp.n},
          {"k", tp.k},
          {"h_order", tp.h_order},
          {"vertices", tp.product.order()},
          {"edges", tp.product.size()},
          {"tree_nodes", nodes},
          {"copy_of", copy_of},
          {"level", level},
          {"progenitors", progenitors},
          {"graph_dimacs", to_dimacs(tp.product)}};
}

json rational_to_json(const Rational& q) { return to_string(q); }

json fractional_to_json(const FractionalResult& f) {
  json sets = json::array();
  for (std::size_t i = 0; i < f.coloring.sets.size(); ++i)
    sets.push_back({{"set", f.coloring.sets[i]}, {"weight", rational_to_json(f.coloring.weights[i])}});
  json clique = json::array();
  for (const auto& w : f.clique.weights) clique.push_back(rational_to_json(w));
  json j = {{"status", to_string(f.status)},
            {"lower", rational_to_json(f.lower)},
            {"upper", rational_to_json(f.upper)},
            {"independent_sets", f.independent_sets},
            {"pivots", f.pivots}};
  if (f.status == Verdict::yes) {
    j["value"] = rational_to_json(f.value);
    j["coloring"] = sets;
    j["fractional_clique"] = clique;
  }
  return j;
}

json removal_audit_to_json(const RemovalAudit& a) {
  return {{"removed", a.removed},
          {"genus", a.genus},
          {"vortex_count", a.vortex_count},
          {"depth_bound", a.depth_bound},
          {"bound", a.bound},
          {"residual_planar", a.residual_planar},
          {"treewidth", a.treewidth},
          {"treewidth_exact", a.treewidth_exact},
          {"treewidth_comparison", a.treewidth_exact ? "exact <= bound" : "min-fill upper bound <= bound"},
          {"within_bound", a.within_bound},
          {"m0", a.m0},
          {"m1", a.m1},
          {"n_sizes", a.n_sizes},
          {"reductions", a.reductions}};
}

}  // namespace minorcolor
