#include <algorithm>
#include <string>
#include <vector>

#include "gperm/error.hpp"
#include "gperm/graphs.hpp"

namespace gperm {
namespace {

// Dart 2e walks edge e from its first endpoint, dart 2e+1 from its second.
int dart_from(const Multigraph& g, EdgeIndex e, Vertex from) {
  return g.edge(e).u == from ? 2 * e : 2 * e + 1;
}

Vertex dart_tail(const Multigraph& g, int dart) {
  const Edge& e = g.edge(dart / 2);
  return dart % 2 == 0 ? e.u : e.v;
}

Vertex dart_head(const Multigraph& g, int dart) {
  const Edge& e = g.edge(dart / 2);
  return dart % 2 == 0 ? e.v : e.u;
}

// Face id per dart.
std::vector<int> face_of_darts(const Multigraph& g, const RotationSystem& rot,
                               std::vector<Face>& faces) {
  const int darts = 2 * g.edge_count();
  // Position of each edge within the rotation at each of its ends.
  std::vector<int> pos(static_cast<std::size_t>(darts), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& ring = rot.order[v];
    for (std::size_t i = 0; i < ring.size(); ++i) {
      pos[dart_from(g, ring[i], v)] = static_cast<int>(i);
    }
  }
  std::vector<int> face(static_cast<std::size_t>(darts), -1);
  for (int start = 0; start < darts; ++start) {
    if (face[start] != -1) continue;
    Face f;
    const int id = static_cast<int>(faces.size());
    int d = start;
    while (face[d] == -1) {
      face[d] = id;
      f.edges.push_back(d / 2);
      f.corners.push_back(dart_tail(g, d));
      const Vertex at = dart_head(g, d);
      const auto& ring = rot.order[at];
      const int i = pos[dart_from(g, d / 2, at)];
      const EdgeIndex next = ring[(static_cast<std::size_t>(i) + 1) % ring.size()];
      d = dart_from(g, next, at);
    }
    faces.push_back(std::move(f));
  }
  return face;
}

}  // namespace

std::vector<Face> trace_faces(const Multigraph& g, const RotationSystem& rot) {
  rot.validate(g);
  std::vector<Face> faces;
  face_of_darts(g, rot, faces);
  return faces;
}

PlanarDual planar_dual(const Multigraph& g, const RotationSystem& rot) {
  rot.validate(g);
  if (!is_connected(g)) throw PreconditionError("embedding requires a connected graph");
  std::vector<Face> faces;
  const auto face = face_of_darts(g, rot, faces);
  const int f = static_cast<int>(faces.size());
  if (g.vertex_count() - g.edge_count() + f != 2) {
    throw PreconditionError("rotation system is not planar: V - E + F = " +
                            std::to_string(g.vertex_count() - g.edge_count() + f));
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const int a = face[2 * e];
    const int b = face[2 * e + 1];
    if (a == b) {
      throw PreconditionError("edge " + std::to_string(e) +
                              " is a bridge; its dual would be a loop");
    }
    edges.push_back({a, b});
  }

  PlanarDual out;
  out.dual = Multigraph(f, std::move(edges));
  // Dual edge e leaves the face traced through primal dart 2e (first -> second
  // endpoint) and enters the face traced through dart 2e+1.
  out.orientation = Orientation::natural(out.dual);
  out.rotation.order.resize(static_cast<std::size_t>(f));
  for (int i = 0; i < f; ++i) out.rotation.order[i] = faces[i].edges;
  out.faces = std::move(faces);
  return out;
}

}  // namespace gperm
