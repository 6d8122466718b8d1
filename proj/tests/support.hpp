#pragma once
// Test-only graph builders, random instance generators and brute-force
// oracles. Nothing here calls into the library's permanent, tagging or
// isomorphism code, so it can be used to check those.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gperm/graphs.hpp"
#include "gperm/matrix.hpp"
#include "gperm/permanent.hpp"

namespace gperm::test {

// ---------------------------------------------------------------- builders

inline Multigraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Multigraph(n, std::move(edges));
}

inline Multigraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(n, std::move(edges));
}

inline Multigraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Multigraph(n, std::move(edges));
}

/// k parallel edges between two vertices.
inline Multigraph parallel_edges(int k) {
  return Multigraph(2, std::vector<Edge>(static_cast<std::size_t>(k), Edge{0, 1}));
}

/// K6 minus the perfect matching {03, 14, 25}.
inline Multigraph octahedron() {
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j != i + 3) edges.push_back({i, j});
  return Multigraph(6, std::move(edges));
}

inline Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  return parse_graph(text, detect_format(text));
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Multigraph relabel(const Multigraph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Multigraph(g.vertex_count(), std::move(edges));
}

// ---------------------------------------------------------------- random instances

inline Orientation random_orientation(const Multigraph& g, std::mt19937_64& rng) {
  std::vector<bool> f(static_cast<std::size_t>(g.edge_count()));
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = (rng() & 1) != 0;
  return Orientation(std::move(f));
}

/// Connected loop-free multigraph on n vertices with m >= n - 1 edges: a
/// random tree plus random extra edges, in shuffled order.
inline Multigraph random_connected_multigraph(int n, int m, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    const int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    edges.push_back({parent, v});
  }
  while (static_cast<int>(edges.size()) < m) {
    const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (a != b) edges.push_back({a, b});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(Multigraph(n, std::move(edges)), perm);
}

inline Multigraph random_balanced_graph(int n, int k, std::mt19937_64& rng) {
  return random_connected_multigraph(n, k * (n - 1), rng);
}

inline bool has_bridge(const Multigraph& g) {
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const EdgeIndex drop[] = {e};
    if (!is_connected(remove_edges(g, drop))) return true;
  }
  return false;
}

/// A plane multigraph with n vertices and 2(n - 1) edges and its rotation
/// system. Grows a tree by pendant edges, then adds chords between two
/// corners of one face, which keeps the embedding planar. Retries until
/// the graph has no bridge, so the dual is loop-free.
inline std::pair<Multigraph, RotationSystem> random_plane_graph(int n, std::mt19937_64& rng) {
  auto pick = [&](std::size_t size) { return static_cast<std::size_t>(rng() % size); };
  while (true) {
    std::vector<Edge> edges{{0, 1}};
    std::vector<std::vector<EdgeIndex>> rot{{0}, {0}};
    auto insert_after = [&](Vertex v, std::size_t pos, EdgeIndex e) {
      auto& r = rot[static_cast<std::size_t>(v)];
      r.insert(r.begin() + static_cast<std::ptrdiff_t>(pos + 1), e);
    };
    for (int v = 2; v < n; ++v) {
      const Vertex at = static_cast<Vertex>(pick(static_cast<std::size_t>(v)));
      const EdgeIndex e = static_cast<EdgeIndex>(edges.size());
      edges.push_back({at, v});
      insert_after(at, pick(rot[static_cast<std::size_t>(at)].size()), e);
      rot.push_back({e});
    }
    // Faces as lists of corners (vertex, position in its rotation). Arriving
    // at w along e, the walk leaves along the edge after e around w.
    auto trace = [&]() {
      std::vector<std::vector<std::pair<Vertex, std::size_t>>> faces;
      std::vector<std::vector<bool>> used(rot.size());
      for (std::size_t v = 0; v < rot.size(); ++v) used[v].assign(rot[v].size(), false);
      for (std::size_t v0 = 0; v0 < rot.size(); ++v0) {
        for (std::size_t p0 = 0; p0 < rot[v0].size(); ++p0) {
          if (used[v0][p0]) continue;
          std::vector<std::pair<Vertex, std::size_t>> face;
          std::size_t v = v0, p = p0;
          while (!used[v][p]) {
            used[v][p] = true;
            const EdgeIndex e = rot[v][p];
            const Edge& ed = edges[static_cast<std::size_t>(e)];
            const auto w = static_cast<std::size_t>(ed.u == static_cast<Vertex>(v) ? ed.v : ed.u);
            const auto& rw = rot[w];
            const auto at = static_cast<std::size_t>(std::find(rw.begin(), rw.end(), e) - rw.begin());
            face.push_back({static_cast<Vertex>(w), at});
            v = w;
            p = (at + 1) % rw.size();
          }
          faces.push_back(std::move(face));
        }
      }
      return faces;
    };
    int attempts = 0;
    while (static_cast<int>(edges.size()) < 2 * (n - 1) && attempts < 1000) {
      ++attempts;
      const auto faces = trace();
      const auto& face = faces[pick(faces.size())];
      const auto a = face[pick(face.size())];
      const auto b = face[pick(face.size())];
      if (a.first == b.first) continue;
      const EdgeIndex e = static_cast<EdgeIndex>(edges.size());
      edges.push_back({a.first, b.first});
      insert_after(a.first, a.second, e);
      insert_after(b.first, b.second, e);
    }
    Multigraph g(n, edges);
    if (g.edge_count() != 2 * (n - 1) || has_bridge(g)) continue;
    return {std::move(g), RotationSystem{rot}};
  }
}

// ---------------------------------------------------------------- glued instances

/// Removes one 0-1 edge from each of a and b and identifies their vertices 0
/// and 1. Vertices 2.. of a keep their numbers; those of b follow. Returns
/// the glued graph and the vertices that came from a.
inline std::pair<Multigraph, std::vector<Vertex>> glue_two_cut(const Multigraph& a,
                                                             const Multigraph& b) {
  std::vector<Edge> edges;
  std::vector<Vertex> left;
  const int na = a.vertex_count();
  for (Vertex v = 2; v < na; ++v) left.push_back(v);
  auto add = [&](const Multigraph& g, auto map) {
    bool dropped = false;
    for (const Edge& e : g.edges()) {
      const bool is01 = (e.u == 0 && e.v == 1) || (e.u == 1 && e.v == 0);
      if (is01 && !dropped) {
        dropped = true;
        continue;
      }
      edges.push_back({map(e.u), map(e.v)});
    }
  };
  add(a, [](Vertex v) { return v; });
  add(b, [na](Vertex v) { return v < 2 ? v : v + na - 2; });
  return {Multigraph(na + b.vertex_count() - 2, std::move(edges)), std::move(left)};
}

/// Deletes edges ea1, ea2 of a and eb1, eb2 of b (each pair disjoint) and
/// joins the freed endpoints across: first endpoints of ea1 to eb1, and so
/// on. b's vertices follow a's; the four joining edges come last.
inline Multigraph glue_four_edges(const Multigraph& a, EdgeIndex ea1, EdgeIndex ea2,
                                  const Multigraph& b, EdgeIndex eb1, EdgeIndex eb2) {
  const int na = a.vertex_count();
  std::vector<Edge> edges;
  for (EdgeIndex e = 0; e < a.edge_count(); ++e)
    if (e != ea1 && e != ea2) edges.push_back(a.edge(e));
  for (EdgeIndex e = 0; e < b.edge_count(); ++e)
    if (e != eb1 && e != eb2) edges.push_back({b.edge(e).u + na, b.edge(e).v + na});
  const Edge a1 = a.edge(ea1), a2 = a.edge(ea2), b1 = b.edge(eb1), b2 = b.edge(eb2);
  edges.push_back({a1.u, b1.u + na});
  edges.push_back({a1.v, b1.v + na});
  edges.push_back({a2.u, b2.u + na});
  edges.push_back({a2.v, b2.v + na});
  return Multigraph(na + b.vertex_count(), std::move(edges));
}

/// Two vertex-disjoint edges of g, chosen at random.
inline std::pair<EdgeIndex, EdgeIndex> random_disjoint_edges(const Multigraph& g,
                                                             std::mt19937_64& rng) {
  const auto m = static_cast<std::uint64_t>(g.edge_count());
  while (true) {
    const auto e1 = static_cast<EdgeIndex>(rng() % m);
    const auto e2 = static_cast<EdgeIndex>(rng() % m);
    const Edge a = g.edge(e1), b = g.edge(e2);
    if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) return {e1, e2};
  }
}

// ---------------------------------------------------------------- oracles

/// Sum over all permutations; only for tiny matrices.
inline BigInt naive_permanent(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  BigInt total = 0;
  do {
    BigInt term = 1;
    for (int i = 0; i < n && term != 0; ++i) term *= m(i, sigma[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

/// Determinant over Z_p by Gaussian elimination.
inline std::int64_t det_mod(IntMatrix m, std::int64_t p) {
  const int n = m.rows();
  auto norm = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto inverse = [&](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    for (a = norm(a); e > 0; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  };
  std::int64_t det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (norm(m(r, c)) != 0) { pivot = r; break; }
    if (pivot < 0) return 0;
    if (pivot != c) {
      m.swap_rows(pivot, c);
      det = norm(-det);
    }
    const std::int64_t inv = inverse(m(c, c));
    det = det * norm(m(c, c)) % p;
    for (int r = c + 1; r < n; ++r) {
      const std::int64_t f = norm(m(r, c)) * inv % p;
      for (int j = c; j < n; ++j) m(r, j) = norm(m(r, j) - f * norm(m(c, j)));
    }
  }
  return det;
}

/// Perm(kDSI) from first principles: each edge is given to one endpoint, the
/// special vertex takes none and every other vertex exactly k, an edge given
/// to its head contributes -1, and each such choice stands for (k!)^(|V|-1)
/// permutations.
inline BigInt tagging_oracle(const Multigraph& g, const Orientation& o, Vertex special, int k) {
  const int n = g.vertex_count();
  std::vector<int> load(static_cast<std::size_t>(n), 0);
  BigInt total = 0;
  auto go = [&](auto&& self, EdgeIndex e, int sign) -> void {
    if (e == g.edge_count()) {
      for (int v = 0; v < n; ++v)
        if (v != special && load[static_cast<std::size_t>(v)] != k) return;
      total += sign;
      return;
    }
    const Vertex ends[2] = {o.tail(g, e), o.head(g, e)};
    for (int side = 0; side < 2; ++side) {
      const Vertex v = ends[side];
      if (v == special || load[static_cast<std::size_t>(v)] == k) continue;
      ++load[static_cast<std::size_t>(v)];
      self(self, e + 1, side == 0 ? sign : -sign);
      --load[static_cast<std::size_t>(v)];
    }
  };
  go(go, 0, 1);
  BigInt fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  for (int i = 0; i < n - 1; ++i) total *= fact;
  return total;
}

/// Signed incidence matrix, special row removed, k copies; built directly.
inline IntMatrix kdsi_oracle(const Multigraph& g, const Orientation& o, Vertex special, int k) {
  const int n = g.vertex_count();
  IntMatrix m(k * (n - 1), g.edge_count());
  for (int c = 0; c < k; ++c) {
    int row = c * (n - 1);
    for (Vertex v = 0; v < n; ++v) {
      if (v == special) continue;
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (o.tail(g, e) == v) m(row, e) = 1;
        if (o.head(g, e) == v) m(row, e) = -1;
      }
      ++row;
    }
  }
  return m;
}

inline int canonical_of(BigInt raw, int modulus) {
  BigInt r = raw % modulus;
  if (r < 0) r += modulus;
  const int ri = static_cast<int>(r);
  return std::min(ri, modulus - ri);
}

/// Adjacency-preserving bijection by trying every permutation.
inline bool isomorphic_brute(const Multigraph& a, const Multigraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        ok = a.multiplicity(i, j) == b.multiplicity(perm[static_cast<std::size_t>(i)],
                                                    perm[static_cast<std::size_t>(j)]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// All 2^|E| orientations; counts s-to-t orientations of a 2k-regular graph
/// by parity of disagreement with `reference`.
inline std::pair<std::int64_t, std::int64_t> st_orientations_brute(const Multigraph& g,
                                                                  const Orientation& reference,
                                                                  Vertex s, Vertex t) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  const int k = g.degree(0) / 2;
  std::int64_t even = 0, odd = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    int disagree = 0;
    for (int e = 0; e < m; ++e) {
      const bool fwd = ((mask >> e) & 1) != 0;
      const Edge& ed = g.edge(e);
      ++out[static_cast<std::size_t>(fwd ? ed.u : ed.v)];
      if (fwd != reference.forward(e)) ++disagree;
    }
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      const int want = v == s ? 2 * k : v == t ? 0 : k;
      ok = out[static_cast<std::size_t>(v)] == want;
    }
    if (!ok) continue;
    (disagree % 2 == 0 ? even : odd) += 1;
  }
  return {even, odd};
}

/// Does any orientation make out - in divisible by k at every vertex?
inline bool modulo_orientation_exists_brute(const Multigraph& g, int k) {
  const int m = g.edge_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> diff(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e = 0; e < m; ++e) {
      const bool fwd = ((mask >> e) & 1) != 0;
      ++diff[static_cast<std::size_t>(fwd ? g.edge(e).u : g.edge(e).v)];
      --diff[static_cast<std::size_t>(fwd ? g.edge(e).v : g.edge(e).u)];
    }
    if (std::all_of(diff.begin(), diff.end(), [k](int d) { return d % k == 0; })) return true;
  }
  return false;
}

}  // namespace gperm::test
