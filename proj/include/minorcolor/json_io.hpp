#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "minorcolor/coloring.hpp"
#include "minorcolor/constructions.hpp"
#include "minorcolor/embedding.hpp"
#include "minorcolor/fractional.hpp"
#include "minorcolor/graph.hpp"
#include "minorcolor/structured.hpp"
#include "minorcolor/tree_decomposition.hpp"

namespace minorcolor {

using json = nlohmann::json;

json read_json_file(const std::filesystem::path& path);

/// `.json` files use the graph schema below, anything else is DIMACS.
Graph read_graph_file(const std::filesystem::path& path);
OrderedGraph read_ordered_graph_file(const std::filesystem::path& path);

/// {"n": n, "edges": [[u, v], ...]}
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"n", "edges", "order"}; order defaults to the identity.
json ordered_graph_to_json(const OrderedGraph& g);
OrderedGraph ordered_graph_from_json(const json& j);

json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

/// {"nodes": [{"id", "bag", "parent"}], "root"}; parent -1 or null at the root.
json td_to_json(const RootedTreeDecomposition& td);
RootedTreeDecomposition td_from_json(const json& j);

/// {"n"?, "rotation": {"v": [neighbours...]}, "signature": {"u-v": +-1}}.
/// Missing signatures are +1; n defaults to 1 + the largest id.
json embedding_to_json(const RotationEmbedding& e);
RotationEmbedding embedding_from_json(const json& j);

/// Lemma-remove fixture: {"embedding", "vortices": [{"boundary",
/// "path_bags", "face", "edges"?}], "a"}. Vortex ids: G0 ids for boundary
/// vertices, ids >= n for private vertices.
struct RemovalInstance {
  RotationEmbedding g0;
  std::vector<Vortex> vortices;
  int a = 0;
};
RemovalInstance removal_instance_from_json(const json& j);

/// Tree decomposition schema plus per node "apex", "inner_apex",
/// "embedding" (host ids) and "vortices", and global "t", "a_H".
StructuredDecomposition structured_from_json(const json& j);
json structured_to_json(const StructuredDecomposition& sd);

json tree_product_to_json(const TreeProduct& tp);
json rational_to_json(const Rational& q);
json fractional_to_json(const FractionalResult& f);
json removal_audit_to_json(const RemovalAudit& a);

}  // namespace minorcolor
