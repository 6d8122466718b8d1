#pragma once

#include "gperm/graphs.hpp"
#include "gperm/matrix.hpp"

namespace gperm {

/// k vertical copies of the signed incidence matrix with the special
/// vertex's row removed. Block row r belongs to vertex r if r < special,
/// otherwise to vertex r + 1.
struct KdsiMatrix {
  IntMatrix matrix;
  int k = 1;
  Vertex special_vertex = 0;
  Orientation orientation;
  int block_rows = 0;

  bool is_square() const { return matrix.is_square(); }
  /// The single block that is stacked.
  IntMatrix block() const { return matrix.row_block(0, block_rows); }
  /// Graph vertex behind block row r.
  Vertex vertex_of_row(int r) const { return r < special_vertex ? r : r + 1; }
};

KdsiMatrix build_kdsi(const Multigraph& g, const Orientation& o, Vertex special, int k);

}  // namespace gperm
