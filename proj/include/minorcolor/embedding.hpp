#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

/// Combinatorial surface embedding: a cyclic order of neighbours around
/// every vertex plus a sign per edge (-1 marks an orientation-reversing
/// edge). signature is indexed like graph.edges().
struct RotationEmbedding {
  Graph graph;
  std::vector<std::vector<Vertex>> rotation;
  std::vector<int> signature;

  /// All-positive signature, rotation as given.
  static RotationEmbedding orientable(Graph g, std::vector<std::vector<Vertex>> rotation);
};

struct Dart {
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Closed boundary walk. orientation[i] is the local orientation (+1/-1)
/// in effect when darts[i] leaves darts[i].from.
struct Face {
  std::vector<Dart> darts;
  std::vector<int> orientation;

  std::vector<Vertex> vertices() const;
};

/// Throws PreconditionError when a rotation is not a permutation of the
/// vertex's neighbours or a signature is not +-1.
void validate_embedding(const RotationEmbedding& e);

/// Face boundary walks. Each face is reported once (its reverse walk is
/// suppressed); faces are ordered by their lowest starting edge-end, and
/// vertices of degree 0 carry no face.
std::vector<Face> trace_faces(const RotationEmbedding& e);

/// 2 - V + E - F for a connected embedding. Throws PreconditionError on a
/// disconnected graph.
int euler_genus(const RotationEmbedding& e);

/// Faces of an embedded graph that may have several components: checks
/// V - E + F == 2 * components, i.e. every component is spherical.
bool is_spherical(const RotationEmbedding& e);

/// Sub-embedding on the same vertex ids keeping only the listed edges.
RotationEmbedding restrict_embedding(const RotationEmbedding& e, const std::vector<Edge>& keep);

/// Relabels vertex v to perm[v]; rotations and signatures follow.
RotationEmbedding relabel_embedding(const RotationEmbedding& e, const std::vector<Vertex>& perm);

/// Vortex: a graph glued along a boundary sequence, with a path
/// decomposition in which boundary[i] lies in path_bags[i].
struct Vortex {
  Graph graph;
  std::vector<Vertex> boundary;
  std::vector<std::vector<Vertex>> path_bags;
  int face = -1;
  int depth = 0;
};

/// Checks the path decomposition axioms, |bag| <= depth + 1 and
/// boundary[i] in path_bags[i]. Returns human-readable violations.
std::vector<std::string> vortex_violations(const Vortex& v);

/// Minimal one-face spanning structure used to planarize an embedded graph.
struct OneFaceSubgraph {
  std::vector<Vertex> vertices;  // ids of the embedding the subgraph lives in
  std::vector<Edge> edges;
  RotationEmbedding embedding;   // same vertex ids, only the subgraph's edges
  int genus = 0;
  int reductions = 0;            // post-reduction steps applied
};

/// Repeatedly deletes the lowest-index edge separating two distinct faces and
/// prunes vertices of degree <= 1 until one face remains. Throws
/// PreconditionError for genus 0 or a disconnected embedding.
OneFaceSubgraph one_face_subgraph(const RotationEmbedding& e);

/// Result and audit of planarizing an embedded graph with vortices.
struct RemovalAudit {
  std::vector<Vertex> removed;      // L0, ids of G0
  int genus = 0;
  int vortex_count = 0;
  int depth_bound = 0;              // the parameter a
  int bound = 0;                    // 26g + 9m + a
  bool residual_planar = false;     // G0 - L0 passes the planarity oracle
  int treewidth = 0;                // of G0[L0] together with the vortices
  bool treewidth_exact = false;     // false: min-fill upper bound
  bool within_bound = false;        // treewidth <= bound (upper bound if inexact)
  int m0 = 0, m1 = 0;               // |M0|, |M1|
  std::vector<int> n_sizes;         // |N_i| per vortex
  int reductions = 0;
  std::vector<std::string> precondition_violations;
};

/// Given a 2-cell embedded G0 and vortices attached to distinct faces,
/// finds L0 with G0 - L0 planar and audits the treewidth of
/// G0[L0] + vortices. Sphere inputs return L0 = {}.
/// Vortex graphs use the vertex ids of G0 for shared boundary vertices;
/// their other vertices must have ids >= G0.order().
/// Throws PreconditionError listing every violated precondition.
RemovalAudit lemma_remove(const RotationEmbedding& g0, const std::vector<Vortex>& vortices, int depth_bound);

}  // namespace minorcolor
