#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gperm/graphs.hpp"
#include "gperm/matrix.hpp"

namespace gperm {

/// Edge values in Z_k, stored in [0, k).
struct FlowAssignment {
  int modulus = 2;
  std::vector<int> values;

  static FlowAssignment from_integers(int modulus, std::span<const std::int64_t> values);
};

/// Per-vertex boundary: sum over edges leaving v minus sum over edges
/// entering v, in [0, modulus).
std::vector<int> boundary(const Multigraph& g, const Orientation& o, const FlowAssignment& phi);
bool is_flow(const Multigraph& g, const Orientation& o, const FlowAssignment& phi);

inline constexpr int kMaxOrientationSearchEdges = 24;

/// True when out-degree minus in-degree is divisible by k at every vertex.
bool is_modulo_orientation(const Multigraph& g, const Orientation& o, int k);

/// An orientation with out - in divisible by k everywhere, or nullopt when
/// none exists. The search fixes edges in index order, trying the edge's
/// natural direction first, and prunes a vertex as soon as no completion of
/// its remaining edges can reach a multiple of k. Throws LimitError above
/// kMaxOrientationSearchEdges edges.
std::optional<Orientation> find_modulo_orientation(const Multigraph& g, int k);

struct OrientationCertificate {
  int p = 3;
  /// Edge indices of the spanning subgraph H, ascending.
  std::vector<EdgeIndex> subgraph_edges;
  /// Perm of the (p-1)DSI matrix of H (natural orientation, special vertex
  /// 0), reduced into [1, p).
  int permanent_residue = 0;
  std::optional<Orientation> orientation;
};

struct CertificateSearch {
  std::optional<OrientationCertificate> certificate;
  std::int64_t subsets_examined = 0;
  std::int64_t connected_subsets = 0;
};

inline constexpr std::int64_t kMaxCertificateSubsets = 5'000'000;

bool is_prime(int p);

/// Walks the spanning subgraphs H with (p-1)(|V|-1) edges in lexicographic
/// order of their edge sets and stops at the first connected one whose
/// (p-1)DSI permanent is nonzero mod p. With at most
/// kMaxOrientationSearchEdges edges, a modulo-p orientation of g is found
/// by search and attached.
///
/// p must be an odd prime: for p = 2 the flow values -1 and 1 coincide and a
/// spanning tree always has permanent 1, so the certificate would claim
/// orientations that need not exist.
CertificateSearch alon_tarsi_certificate(const Multigraph& g, int p,
                                         std::int64_t max_subsets = kMaxCertificateSubsets);

std::string certificate_to_json(const OrientationCertificate& cert, int indent = 2);
OrientationCertificate certificate_from_json(std::string_view text);

struct FundamentalCutMatrix {
  std::vector<EdgeIndex> tree;
  std::vector<EdgeIndex> non_tree;
  /// Row i belongs to tree[i], column j to non_tree[j]. An edge crossing the
  /// fundamental cut of f in the same direction as f gets -1, in the
  /// opposite direction +1.
  IntMatrix matrix;
};

/// Rows follow the order of `tree`; non-tree edges are taken in index order.
FundamentalCutMatrix fundamental_cut_matrix(const Multigraph& g, std::span<const EdgeIndex> tree,
                                            const Orientation& o);

/// Every spanning tree of g as ascending edge-index lists, in lexicographic
/// order. Throws LimitError past `limit` trees.
std::vector<std::vector<EdgeIndex>> all_spanning_trees(const Multigraph& g,
                                                       std::int64_t limit = 100'000);

}  // namespace gperm
