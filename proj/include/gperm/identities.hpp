#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gperm/graphs.hpp"
#include "gperm/invariant.hpp"
#include "gperm/permanent.hpp"

namespace gperm {

/// One side of an identity: an exact permanent when it was affordable, and
/// the residue it reduces to.
struct IdentityValue {
  std::string label;
  std::optional<BigInt> raw;
  int modulus = 3;
  int raw_residue = 0;
  int canonical = 0;
};

struct IdentityReport {
  std::string identity;
  std::vector<IdentityValue> left;
  std::vector<IdentityValue> right;
  bool holds = false;
  /// graph6 or edgelist text of the graphs involved, for reproducing a failure.
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
};

std::string report_to_json(const IdentityReport& report, int indent = 2);
IdentityReport report_from_json(std::string_view text);

/// Value of Perm(kDSI of g, orientation o, special vertex) where k is read
/// off the edge count. The exact value is filled in when the matrix side is
/// within kMaxExactSide.
IdentityValue kdsi_value(std::string label, const Multigraph& g, const Orientation& o,
                         Vertex special);

// ---------------------------------------------------------------- invariance

/// Graph permanent for every special vertex (natural orientation). Holds when
/// the canonical residues agree and the raw residues agree (even k) or agree
/// up to sign (odd k).
IdentityReport check_special_vertex(const Multigraph& g);

/// Graph permanent of every connected decompletion of a 2k-regular graph.
IdentityReport check_decompletion(const Multigraph& gamma);

/// Tag enumeration against the exact permanent, for every special vertex.
IdentityReport check_tag_oracle(const Multigraph& g);

struct OrientationPairResult {
  Vertex s = 0;
  Vertex t = 0;
  OrientationCensus census;
  BigInt permanent = 0;
  bool factor_matches = false;
  bool literal_matches = false;
};

/// Signed s-to-t orientation counts under an Eulerian reference, compared
/// with Perm(kDSI of gamma - t, special s). `pairs` empty means all ordered
/// pairs. Holds when every pair satisfies
///   Perm = (k!)^(|V|-2) (-1)^(k(|V|+1)) (E - O)
/// and all E - O agree mod k+1. Whether the bare (-1)^k (E - O) form also
/// matched is reported per pair.
IdentityReport check_orientation_identity(
    const Multigraph& gamma, std::span<const std::pair<Vertex, Vertex>> pairs = {},
    std::vector<OrientationPairResult>* details = nullptr);

// ---------------------------------------------------------------- duality, twist

IdentityReport check_dual(const Multigraph& g, const RotationSystem& rot);

/// Compares the graph permanent of the first connected decompletion of gamma
/// and of its twist.
IdentityReport check_twist(const Multigraph& gamma, const TwistPairing& cut,
                           std::span<const Vertex> side);

// ---------------------------------------------------------------- cuts

/// A graph cut into two minors. Vertex i of `first` is original vertex
/// `first_vertices[i]` (likewise for `second`); -1 marks a vertex that does
/// not exist in the original graph.
struct CutSplit {
  Multigraph first;
  Multigraph second;
  std::vector<Vertex> first_vertices;
  std::vector<Vertex> second_vertices;
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

/// G1 is the left side plus v1, v2 and one new v1-v2 edge; G2 likewise for
/// the right. Direct v1-v2 edges of g are handed out so that both minors
/// satisfy |E| = 2(|V| - 1). An empty `left` picks the component of g -
/// {v1, v2} holding its smallest vertex. In both minors v1 is vertex 0 and v2
/// is vertex 1.
CutSplit split_two_vertex_cut(const Multigraph& g, Vertex v1, Vertex v2,
                              std::span<const Vertex> left = {});
IdentityReport check_two_vertex_cut(const Multigraph& g, Vertex v1, Vertex v2,
                                    std::span<const Vertex> left = {});

struct ThreeCutSplit {
  Vertex decompleted = 0;
  Multigraph decompletion;
  /// Split of `decompletion`, in its own vertex numbering.
  CutSplit split;
};

/// Deletes one cut vertex of a 4-regular graph so that the other two form a
/// two-vertex cut whose minors are balanced; cut vertices are tried in the
/// given order.
ThreeCutSplit split_three_vertex_cut(const Multigraph& gamma, std::span<const Vertex> cut);
IdentityReport check_three_vertex_cut(const Multigraph& gamma, std::span<const Vertex> cut);

/// A 4-regular graph cut along four edges. gamma1 is the left side with the
/// right side contracted to `x` (its last vertex); gamma2 is the right side
/// with the left side contracted to `y` (its last vertex). Orientations are
/// inherited edge by edge from gamma.
struct FourEdgeSplit {
  Multigraph gamma1;
  Multigraph gamma2;
  Orientation orientation1;
  Orientation orientation2;
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  Vertex x = 0;
  Vertex y = 0;
  /// Vertex maps from gamma to the pieces (-1 when absent).
  std::vector<Vertex> to_first;
  std::vector<Vertex> to_second;
  /// Vertices of each side not incident with a cut edge.
  std::vector<Vertex> left_interior;
  std::vector<Vertex> right_interior;
};

FourEdgeSplit split_four_edge_cut(const Multigraph& gamma, std::span<const EdgeIndex> cut,
                                  const Orientation& o);

/// Exact product check
///   Perm(2DSI(gamma - h, special q))
///     = Perm(2DSI(gamma1 - h, special x)) * Perm(2DSI(gamma2 - y, special q))
/// with h a left vertex and q a right vertex, both away from the cut. h and q
/// default to the smallest such vertices; the orientation defaults to the
/// natural one.
IdentityReport check_four_edge_cut(const Multigraph& gamma, std::span<const EdgeIndex> cut,
                                   std::optional<Vertex> hollow = std::nullopt,
                                   std::optional<Vertex> square = std::nullopt,
                                   const Orientation* orientation = nullptr);

/// Vertices of g - removed grouped into components, smallest vertex first.
std::vector<std::vector<Vertex>> components_without(const Multigraph& g,
                                                    std::span<const Vertex> removed);

}  // namespace gperm
