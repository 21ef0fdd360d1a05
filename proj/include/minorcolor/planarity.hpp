#pragma once

#include <optional>
#include <vector>

#include "minorcolor/embedding.hpp"
#include "minorcolor/graph.hpp"

namespace minorcolor {

enum class KuratowskiKind { none, k5, k33 };

struct PlanarityResult {
  bool planar = false;
  /// Genus-0 rotation system when planar.
  std::optional<RotationEmbedding> embedding;
  /// Edges of a K5 or K3,3 subdivision when not planar.
  std::vector<Edge> kuratowski_edges;
  KuratowskiKind kind = KuratowskiKind::none;
};

/// Planarity test with certificates in both directions. Graphs with
/// |E| > 3n - 6 (n >= 3) are rejected before running the full test.
PlanarityResult test_planarity(const Graph& g);
bool is_planar(const Graph& g);

/// Suppresses degree-2 vertices of the edge set and reports whether what
/// remains is K5 or K3,3. Used to audit rejection certificates.
KuratowskiKind classify_subdivision(int n, const std::vector<Edge>& edges);

}  // namespace minorcolor
