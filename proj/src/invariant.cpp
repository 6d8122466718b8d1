#include "gperm/invariant.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "gperm/error.hpp"

namespace gperm {

KdsiMatrix build_kdsi(const Multigraph& g, const Orientation& o, Vertex special, int k) {
  o.check_for(g);
  if (special < 0 || special >= g.vertex_count()) {
    throw PreconditionError("special vertex " + std::to_string(special) + " out of range");
  }
  if (k < 1) throw PreconditionError("stacking multiplicity k must be at least 1");
  const IntMatrix full = incidence_matrix(g, o);
  std::vector<int> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != special) keep.push_back(v);
  }
  KdsiMatrix out;
  out.matrix = full.select_rows(keep).stacked(k);
  out.k = k;
  out.special_vertex = special;
  out.orientation = o;
  out.block_rows = static_cast<int>(keep.size());
  return out;
}

int canonical_residue(std::int64_t raw, std::int64_t modulus) {
  std::int64_t r = raw % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(std::min(r, modulus - r));
}

int detect_k(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw PreconditionError("the graph permanent needs at least two vertices");
  const int e = g.edge_count();
  if (e == 0 || e % (n - 1) != 0) {
    throw PreconditionError("|E| = " + std::to_string(e) + " is not a positive multiple of |V| - 1 = " +
                            std::to_string(n - 1));
  }
  return e / (n - 1);
}

GraphPermanent graph_permanent(const Multigraph& g) {
  return graph_permanent(g, Orientation::natural(g), 0);
}

GraphPermanent graph_permanent(const Multigraph& g, const Orientation& o, Vertex special) {
  const int k = detect_k(g);
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  const KdsiMatrix kdsi = build_kdsi(g, o, special, k);
  GraphPermanent out;
  out.k = k;
  out.modulus = k + 1;
  out.raw_residue = static_cast<int>(permanent_mod(kdsi.matrix, out.modulus));
  out.canonical_residue = canonical_residue(out.raw_residue, out.modulus);
  return out;
}

namespace {

void check_square_kdsi(const Multigraph& g, const Orientation& o, Vertex special, int k) {
  o.check_for(g);
  if (special < 0 || special >= g.vertex_count()) throw PreconditionError("special vertex out of range");
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (g.edge_count() != k * (g.vertex_count() - 1)) {
    throw PreconditionError("the kDSI matrix is not square: |E| != k(|V| - 1)");
  }
}

BigInt factorial_power(int k, int exponent) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  BigInt out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(out, f, &out)) throw OverflowError("(k!)^n exceeds 128-bit range");
  }
  return out;
}

class TagCounter {
 public:
  TagCounter(const Multigraph& g, const Orientation& o, Vertex special, int k)
      : g_(g), o_(o), capacity_(static_cast<std::size_t>(g.vertex_count()), k),
        unplaced_(g.degrees()) {
    capacity_[special] = 0;
  }

  std::int64_t run() { return place(0); }

 private:
  std::int64_t place(EdgeIndex e) {
    if (e == g_.edge_count()) return 1;
    const Edge& ed = g_.edge(e);
    --unplaced_[ed.u];
    --unplaced_[ed.v];
    std::int64_t sum = 0;
    for (const Vertex x : {ed.u, ed.v}) {
      if (capacity_[x] == 0) continue;
      --capacity_[x];
      if (capacity_[ed.u] <= unplaced_[ed.u] && capacity_[ed.v] <= unplaced_[ed.v]) {
        const std::int64_t sign = o_.tail(g_, e) == x ? 1 : -1;
        sum += sign * place(e + 1);
      }
      ++capacity_[x];
    }
    ++unplaced_[ed.u];
    ++unplaced_[ed.v];
    return sum;
  }

  const Multigraph& g_;
  const Orientation& o_;
  std::vector<int> capacity_;
  std::vector<int> unplaced_;
};

struct CensusTargets {
  std::vector<int> out;
  std::vector<int> in;
};

CensusTargets census_targets(const Multigraph& g, const Orientation& reference, Vertex s,
                             Vertex t) {
  reference.check_for(g);
  const auto d = regular_degree(g);
  if (!d || *d < 2 || *d % 2 != 0) {
    throw PreconditionError("s-to-t orientations need a 2k-regular graph");
  }
  if (s < 0 || t < 0 || s >= g.vertex_count() || t >= g.vertex_count()) {
    throw PreconditionError("s or t out of range");
  }
  if (s == t) throw PreconditionError("s and t must be distinct");
  if (g.edge_count() > kMaxOrientationEdges) {
    throw LimitError("orientation census is limited to " + std::to_string(kMaxOrientationEdges) +
                     " edges");
  }
  const int k = *d / 2;
  CensusTargets targets{std::vector<int>(static_cast<std::size_t>(g.vertex_count()), k),
                        std::vector<int>(static_cast<std::size_t>(g.vertex_count()), k)};
  targets.out[s] = 2 * k;
  targets.in[s] = 0;
  targets.out[t] = 0;
  targets.in[t] = 2 * k;
  return targets;
}

}  // namespace

BigInt signed_tagging_count(const Multigraph& g, const Orientation& o, Vertex special, int k) {
  check_square_kdsi(g, o, special, k);
  return TagCounter(g, o, special, k).run();
}

BigInt tagging_permanent(const Multigraph& g, const Orientation& o, Vertex special, int k) {
  const BigInt count = signed_tagging_count(g, o, special, k);
  BigInt out;
  if (__builtin_mul_overflow(count, factorial_power(k, g.vertex_count() - 1), &out)) {
    throw OverflowError("tagging permanent exceeds 128-bit range");
  }
  return out;
}

OrientationCensus signed_orientation_count(const Multigraph& g, const Orientation& reference,
                                           Vertex s, Vertex t) {
  return g.edge_count() > kRawScanEdges ? signed_orientation_count_search(g, reference, s, t)
                                        : signed_orientation_count_scan(g, reference, s, t);
}

OrientationCensus signed_orientation_count_scan(const Multigraph& g,
                                                const Orientation& reference, Vertex s,
                                                Vertex t) {
  const CensusTargets targets = census_targets(g, reference, s, t);
  const int m = g.edge_count();
  std::uint64_t ref_mask = 0;
  for (int e = 0; e < m; ++e) ref_mask |= std::uint64_t{reference.forward(e)} << e;

  OrientationCensus out{s, t, 0, 0};
  std::vector<int> out_deg(static_cast<std::size_t>(g.vertex_count()));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(out_deg.begin(), out_deg.end(), 0);
    for (int e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      ++out_deg[((mask >> e) & 1U) ? ed.u : ed.v];
    }
    if (out_deg != targets.out) continue;
    if (std::popcount(mask ^ ref_mask) % 2 == 0) {
      ++out.even_count;
    } else {
      ++out.odd_count;
    }
  }
  return out;
}

OrientationCensus signed_orientation_count_search(const Multigraph& g,
                                                  const Orientation& reference, Vertex s,
                                                  Vertex t) {
  const CensusTargets targets = census_targets(g, reference, s, t);
  const int m = g.edge_count();
  std::vector<int> out_left = targets.out;
  std::vector<int> in_left = targets.in;
  OrientationCensus out{s, t, 0, 0};

  // Each edge either leaves its first endpoint or its second; a direction is
  // only taken while both endpoints still have room for it.
  auto recurse = [&](auto&& self, int e, int parity) -> void {
    if (e == m) {
      (parity == 0 ? out.even_count : out.odd_count) += 1;
      return;
    }
    const Edge& ed = g.edge(e);
    for (const bool forward : {true, false}) {
      const Vertex from = forward ? ed.u : ed.v;
      const Vertex to = forward ? ed.v : ed.u;
      if (out_left[from] == 0 || in_left[to] == 0) continue;
      --out_left[from];
      --in_left[to];
      self(self, e + 1, parity ^ (forward != reference.forward(e) ? 1 : 0));
      ++out_left[from];
      ++in_left[to];
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

BigInt orientation_identity_factor(const Multigraph& g) {
  const auto d = regular_degree(g);
  if (!d || *d < 2 || *d % 2 != 0) throw PreconditionError("needs a 2k-regular graph");
  const int k = *d / 2;
  const int n = g.vertex_count();
  const BigInt magnitude = factorial_power(k, n - 2);
  return (static_cast<long long>(k) * (n + 1)) % 2 == 0 ? magnitude : -magnitude;
}

}  // namespace gperm
