#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "gperm/error.hpp"
#include "gperm/invariant.hpp"

using namespace gperm;
using namespace gperm::test;

TEST_CASE("known graph permanents") {
  const GraphPermanent k4 = graph_permanent(complete_graph(4));
  CHECK(k4.k == 2);
  CHECK(k4.modulus == 3);
  CHECK(k4.canonical_residue == 0);

  const Multigraph oct_v = delete_vertex(octahedron(), 0);
  CHECK(graph_permanent(oct_v).canonical_residue == 1);

  // A tree's 1DSI matrix is unimodular, so its permanent is odd.
  CHECK(graph_permanent(path_graph(3)).canonical_residue == 1);
  CHECK(graph_permanent(path_graph(6)).canonical_residue == 1);

  CHECK(canonical_residue(-1, 3) == 1);
  CHECK(canonical_residue(4, 5) == 1);
  CHECK(canonical_residue(3, 7) == 3);
}

TEST_CASE("balance and connectivity preconditions") {
  CHECK(detect_k(complete_graph(4)) == 2);
  CHECK(detect_k(parallel_edges(5)) == 5);
  CHECK_THROWS_AS(detect_k(cycle_graph(4)), PreconditionError);
  const Multigraph split(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}, {0, 1}});
  CHECK_THROWS_AS(graph_permanent(split), PreconditionError);
}

TEST_CASE("k parallel edges give k!") {
  BigInt fact = 1;
  for (int k = 1; k <= 8; ++k) {
    fact *= k;
    const Multigraph g = parallel_edges(k);
    // Every edge enters vertex 1, so each of the k! terms is (-1)^k.
    CHECK(tagging_permanent(g, Orientation::natural(g), 0, k) == (k % 2 == 0 ? fact : -fact));
    CHECK(graph_permanent(g).canonical_residue == canonical_of(fact, k + 1));
  }
}

TEST_CASE("tag enumeration equals the exact permanent") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const int k = 1 + trial % 4;
    const int n = 2 + static_cast<int>(rng() % (k <= 2 ? 5 : 3));
    const Multigraph g = random_balanced_graph(n, k, rng);
    const Orientation o = random_orientation(g, rng);
    const Vertex s = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    const BigInt exact = permanent_exact(build_kdsi(g, o, s, k).matrix);
    CHECK(tagging_permanent(g, o, s, k) == exact);
    CHECK(tagging_oracle(g, o, s, k) == exact);
  }
}

TEST_CASE("special vertex and orientation changes") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + trial % 4;
    const int n = k <= 2 ? 6 : 4;
    const Multigraph g = random_balanced_graph(n, k, rng);
    const Orientation o = random_orientation(g, rng);
    const GraphPermanent base = graph_permanent(g, o, 0);
    for (Vertex s = 1; s < n; ++s) {
      const GraphPermanent other = graph_permanent(g, o, s);
      CHECK(other.canonical_residue == base.canonical_residue);
      if (k % 2 == 0) CHECK(other.raw_residue == base.raw_residue);
    }
    // Reversing one edge negates one column.
    const GraphPermanent flipped = graph_permanent(g, o.flipped(0), 0);
    CHECK(flipped.raw_residue == (base.modulus - base.raw_residue) % base.modulus);
  }
}

TEST_CASE("odd k at least 3 gives zero") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = trial % 2 == 0 ? 3 : 5;
    const Multigraph g = random_balanced_graph(k == 3 ? 4 : 3, k, rng);
    CHECK(graph_permanent(g).canonical_residue == 0);
  }
}

TEST_CASE("orientation counts: scan, pruned search and brute force") {
  std::vector<Multigraph> graphs{complete_graph(5), octahedron(), cycle_graph(6)};
  for (const auto& g : graphs) {
    const Orientation ref = eulerian_reference(g);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      for (Vertex t = 0; t < g.vertex_count(); ++t) {
        if (s == t) continue;
        const auto [even, odd] = st_orientations_brute(g, ref, s, t);
        const OrientationCensus scan = signed_orientation_count_scan(g, ref, s, t);
        const OrientationCensus search = signed_orientation_count_search(g, ref, s, t);
        CHECK(scan.even_count == even);
        CHECK(scan.odd_count == odd);
        CHECK(search.even_count == even);
        CHECK(search.odd_count == odd);
      }
    }
  }
}

TEST_CASE("orientation identity with the colouring factor") {
  for (const Multigraph& g : {complete_graph(5), octahedron(), cycle_graph(5), complete_graph(7)}) {
    const Orientation ref = eulerian_reference(g);
    const BigInt factor = orientation_identity_factor(g);
    for (Vertex t : {1, g.vertex_count() - 1}) {
      const Vertex s = 0;
      const OrientationCensus c = signed_orientation_count(g, ref, s, t);
      const Multigraph h = delete_vertex(g, t);
      const Orientation oh = restrict_orientation(g, ref, t);
      const int k = g.degree(0) / 2;
      const BigInt perm = tagging_oracle(h, oh, s < t ? s : s - 1, k);
      CHECK(perm == factor * c.signed_difference());
    }
  }
}
