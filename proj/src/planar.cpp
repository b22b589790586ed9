#include "spinz/planar.hpp"

#include <vector>

#include "spinz/errors.hpp"

namespace spinz {

namespace {

struct EndRef {
  int vertex = -1;
  int index = -1;  // position inside rotation()[vertex]
};

// Location of each edge-end: slot 2e for the head end, 2e+1 for the tail end.
std::vector<EndRef> locate_ends(const OrientedGraph& g) {
  const auto& rot = g.rotation();
  std::vector<EndRef> at(2 * g.edge_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
      const RotationEntry& r = rot[v][i];
      at[2 * r.edge + (r.end == EdgeEnd::Head ? 0 : 1)] = {v, i};
    }
  return at;
}

}  // namespace

std::vector<std::vector<Dart>> trace_faces(const OrientedGraph& g) {
  const auto& rot = g.rotation();
  const int N = g.edge_count();
  if (N == 0) {
    // A lone vertex on the sphere bounds a single face.
    std::vector<std::vector<Dart>> faces(1);
    if (g.vertex_count() - 0 + 1 != 2) throw EulerViolation();
    return faces;
  }
  const auto at = locate_ends(g);

  // Face-tracing successor: arrive through an end, leave through the next
  // end in that vertex's rotation.
  auto next = [&](Dart d) {
    const EndRef& in = at[2 * d.edge + (d.forward ? 0 : 1)];
    const auto& list = rot[in.vertex];
    const RotationEntry& out = list[(in.index + 1) % list.size()];
    return Dart{out.edge, out.end == EdgeEnd::Tail};
  };

  std::vector<std::vector<Dart>> faces;
  std::vector<bool> seen(2 * N, false);
  for (int slot = 0; slot < 2 * N; ++slot) {
    if (seen[slot]) continue;
    Dart d{slot / 2, slot % 2 == 0};
    std::vector<Dart> orbit;
    while (!seen[2 * d.edge + (d.forward ? 0 : 1)]) {
      seen[2 * d.edge + (d.forward ? 0 : 1)] = true;
      orbit.push_back(d);
      d = next(d);
    }
    faces.push_back(std::move(orbit));
  }

  if (is_connected(g) &&
      g.vertex_count() - N + static_cast<int>(faces.size()) != 2)
    throw EulerViolation();
  return faces;
}

OrientedGraph planar_dual(const OrientedGraph& g) {
  if (!g.has_embedding()) throw MissingEmbedding();
  if (!is_connected(g)) throw DisconnectedGraph("planar_dual requires a connected graph");
  const auto faces = trace_faces(g);
  const int N = g.edge_count();
  const int nf = static_cast<int>(faces.size());

  std::vector<int> face_of(2 * N, -1);  // slot -> face
  for (int f = 0; f < nf; ++f)
    for (const Dart& d : faces[f]) face_of[2 * d.edge + (d.forward ? 0 : 1)] = f;

  // Dual edge e runs from the face left of e (holding the forward dart) to
  // the face on its right.
  std::vector<Edge> dual_edges(N);
  for (int e = 0; e < N; ++e)
    dual_edges[e] = {face_of[2 * e + 1], face_of[2 * e]};

  // The boundary walk of a face is its rotation: a forward dart means the
  // face is the dual tail of that edge, a backward dart the dual head.
  RotationSystem dual_rot(nf);
  for (int f = 0; f < nf; ++f)
    for (const Dart& d : faces[f])
      dual_rot[f].push_back({d.edge, d.forward ? EdgeEnd::Tail : EdgeEnd::Head});

  OrientedGraph dual(nf, std::move(dual_edges), std::move(dual_rot));
  if ((incidence_matrix(g) * incidence_matrix(dual).transpose()).cwiseAbs().sum() != 0)
    throw Error("dual orientation failed the incidence orthogonality check");
  return dual;
}

}  // namespace spinz
