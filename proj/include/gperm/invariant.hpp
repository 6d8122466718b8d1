#pragma once

#include <cstdint>
#include <optional>

#include "gperm/graphs.hpp"
#include "gperm/kdsi.hpp"
#include "gperm/permanent.hpp"

namespace gperm {

/// The graph permanent: +-Perm(kDSI) mod k+1, reported as the residue in
/// [0, (k+1)/2] so the sign ambiguity never leaks.
struct GraphPermanent {
  int k = 1;
  int modulus = 2;
  int canonical_residue = 0;
  /// Residue before sign canonicalisation; depends on orientation and
  /// special vertex. Diagnostic only.
  int raw_residue = 0;

  friend bool operator==(const GraphPermanent&, const GraphPermanent&) = default;
};

/// min(r, modulus - r) for r = raw mod modulus.
int canonical_residue(std::int64_t raw, std::int64_t modulus);

/// k with |E| = k(|V| - 1); throws PreconditionError if there is none.
int detect_k(const Multigraph& g);

/// Graph permanent with the natural orientation and special vertex 0.
GraphPermanent graph_permanent(const Multigraph& g);
GraphPermanent graph_permanent(const Multigraph& g, const Orientation& o, Vertex special);

/// Perm of the kDSI matrix computed from tag assignments: each edge is
/// tagged at one endpoint, the special vertex gets no tags and every other
/// vertex exactly k. The signed tag count is multiplied by (k!)^(|V|-1) for
/// the colourings of each tagging.
BigInt tagging_permanent(const Multigraph& g, const Orientation& o, Vertex special, int k);
/// The signed count of taggings alone (no colouring multiplicity).
BigInt signed_tagging_count(const Multigraph& g, const Orientation& o, Vertex special, int k);

/// s-to-t orientations of a 2k-regular graph (s all out, t all in, every
/// other vertex k in and k out), split by the parity of their disagreement
/// with a reference orientation.
struct OrientationCensus {
  Vertex s = 0;
  Vertex t = 0;
  std::int64_t even_count = 0;
  std::int64_t odd_count = 0;

  std::int64_t total() const { return even_count + odd_count; }
  std::int64_t signed_difference() const { return even_count - odd_count; }
};

inline constexpr int kMaxOrientationEdges = 24;
/// Above this many edges the census uses degree-pruned backtracking instead
/// of scanning all 2^|E| orientations.
inline constexpr int kRawScanEdges = 16;

OrientationCensus signed_orientation_count(const Multigraph& g, const Orientation& reference,
                                           Vertex s, Vertex t);
/// Plain 2^|E| scan; reference implementation for the pruned search.
OrientationCensus signed_orientation_count_scan(const Multigraph& g,
                                                const Orientation& reference, Vertex s,
                                                Vertex t);
OrientationCensus signed_orientation_count_search(const Multigraph& g,
                                                  const Orientation& reference, Vertex s,
                                                  Vertex t);

/// Exact multiplier c with Perm(kDSI of g - t, special s) = c * (E_st - O_st)
/// under an Eulerian reference: (k!)^(|V|-2) * (-1)^(k(|V|+1)).
BigInt orientation_identity_factor(const Multigraph& g);

}  // namespace gperm
