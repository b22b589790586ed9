#pragma once

#include <vector>

#include "spinz/graph.hpp"

namespace spinz {

/// Directed traversal of an edge: Forward runs tail -> head.
struct Dart {
  int edge = 0;
  bool forward = true;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Face orbits of the embedding, each a closed dart walk. Requires an
/// embedding; the face count is checked against Euler's formula for
/// connected graphs (throws EulerViolation on mismatch).
std::vector<std::vector<Dart>> trace_faces(const OrientedGraph& g);

/// Geometric dual: one vertex per face, one edge per primal edge under the
/// same id, oriented from the face left of the primal edge to the face on
/// its right. Carries the induced rotation system, so duals can be dualized
/// again. The integer identity B(G) * B(dual)^T = 0 is verified before
/// returning. Throws MissingEmbedding / DisconnectedGraph / EulerViolation.
OrientedGraph planar_dual(const OrientedGraph& g);

}  // namespace spinz
