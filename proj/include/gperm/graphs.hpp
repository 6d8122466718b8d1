#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gperm/matrix.hpp"

namespace gperm {

using Vertex = int;
using EdgeIndex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loop-free multigraph with a stable edge order: edge index i always names
/// the same endpoint pair. Connectivity is not enforced here; operations that
/// need it check it themselves.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count, std::vector<Edge> edges = {},
                      std::vector<std::string> labels = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<std::string>& labels() const { return labels_; }

  int degree(Vertex v) const;
  std::vector<int> degrees() const;
  /// Incident edge indices per vertex, in edge order.
  std::vector<std::vector<EdgeIndex>> incidence() const;
  int multiplicity(Vertex a, Vertex b) const;
  bool is_simple() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

/// One direction per edge; true means first endpoint -> second endpoint.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<bool> forward) : forward_(std::move(forward)) {}

  /// Every edge directed from its first endpoint to its second.
  static Orientation natural(const Multigraph& g);

  int size() const { return static_cast<int>(forward_.size()); }
  bool forward(EdgeIndex e) const { return forward_.at(static_cast<std::size_t>(e)); }
  const std::vector<bool>& directions() const { return forward_; }

  Vertex tail(const Multigraph& g, EdgeIndex e) const;
  Vertex head(const Multigraph& g, EdgeIndex e) const;
  Orientation flipped(EdgeIndex e) const;
  /// Number of edges on which the two orientations disagree.
  int disagreements(const Orientation& other) const;

  /// Throws PreconditionError unless the length matches g.
  void check_for(const Multigraph& g) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<bool> forward_;
};

/// Cyclic order of incident edges around each vertex (a combinatorial map).
struct RotationSystem {
  std::vector<std::vector<EdgeIndex>> order;

  /// Every edge-end appears exactly once; throws PreconditionError otherwise.
  void validate(const Multigraph& g) const;
};

/// A traced face: the edges met walking its boundary, with the vertex each
/// step leaves from.
struct Face {
  std::vector<EdgeIndex> edges;
  std::vector<Vertex> corners;
};

enum class CutKind { TwoVertex, ThreeVertex, FourEdge };

struct CutSpec {
  CutKind kind = CutKind::TwoVertex;
  std::vector<int> members;  // vertices (vertex cuts) or edge indices (edge cut)
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

enum class GraphFormat { Graph6, Edgelist };

// ---------------------------------------------------------------- I/O

GraphFormat parse_format(std::string_view name);
Multigraph parse_graph(std::string_view text, GraphFormat format);
/// Edgelist when the first content line holds whitespace-separated fields,
/// graph6 otherwise.
GraphFormat detect_format(std::string_view text);
/// One graph6 string per non-empty line.
std::vector<Multigraph> parse_graph6_lines(std::string_view text);
std::string format_graph(const Multigraph& g, GraphFormat format);
std::string to_graph6(const Multigraph& g);
std::string to_edgelist(const Multigraph& g);

/// "v: e1 e2 e3 ..." per line, one line per vertex.
RotationSystem parse_rotation(std::string_view text, const Multigraph& g);
std::string format_rotation(const RotationSystem& rot);

// ---------------------------------------------------------------- structure

bool is_connected(const Multigraph& g);
/// Component id per vertex, ignoring the vertices flagged in `removed`.
/// Removed vertices get -1.
std::vector<int> components(const Multigraph& g, const std::vector<bool>& removed);
/// d if every vertex has degree d.
std::optional<int> regular_degree(const Multigraph& g);

/// g minus vertex v; vertices above v shift down by one, edge order kept.
Multigraph delete_vertex(const Multigraph& g, Vertex v);
/// o with the edges at v dropped, matching delete_vertex(g, v).
Orientation restrict_orientation(const Multigraph& g, const Orientation& o, Vertex v);
/// Induced subgraph on `keep` (in that order); edges keep relative order.
Multigraph induced_subgraph(const Multigraph& g, std::span<const Vertex> keep);
/// g with edge i replaced by `edges[i]` etc.; convenience for tests/builders.
Multigraph add_edges(const Multigraph& g, std::span<const Edge> extra);
Multigraph remove_edges(const Multigraph& g, std::span<const EdgeIndex> drop);

/// Any spanning tree as a list of edge indices (BFS from vertex 0).
std::vector<EdgeIndex> spanning_tree(const Multigraph& g);
bool is_spanning_tree(const Multigraph& g, std::span<const EdgeIndex> tree);

// ---------------------------------------------------------------- operations

/// Orientation along one Eulerian circuit: in-degree equals out-degree at
/// every vertex.
Orientation eulerian_reference(const Multigraph& g);

/// |V| x |E|; +1 where an edge leaves the vertex, -1 where it enters.
IntMatrix incidence_matrix(const Multigraph& g, const Orientation& o);

std::vector<Face> trace_faces(const Multigraph& g, const RotationSystem& rot);

struct PlanarDual {
  Multigraph dual;
  /// Dual edge i joins the two faces incident to primal edge i. It is
  /// directed from the face traced along i from its first endpoint to the
  /// face traced along i from its second endpoint.
  Orientation orientation;
  /// Each face's boundary order, which is again a planar rotation.
  RotationSystem rotation;
  std::vector<Face> faces;
};

/// Requires a connected genus-0 embedding (V - E + F = 2).
PlanarDual planar_dual(const Multigraph& g, const RotationSystem& rot);

struct Decompletion {
  Vertex removed = 0;
  Multigraph graph;
  bool connected = false;
};

/// One entry per vertex of a 2k-regular graph.
std::vector<Decompletion> decompletions(const Multigraph& g);

struct TwistPairing {
  Vertex v1 = 0, v2 = 0, v3 = 0, v4 = 0;
};

/// Reattach every edge between `side` and v1 to v2 and vice versa, and the
/// same for v3/v4. `side` must be a union of components of g - {v1..v4}.
Multigraph apply_schnetz_twist(const Multigraph& g, const TwistPairing& cut,
                               std::span<const Vertex> side);

/// Isomorphism-invariant certificate of a simple graph.
std::string canonical_form(const Multigraph& g);

}  // namespace gperm
