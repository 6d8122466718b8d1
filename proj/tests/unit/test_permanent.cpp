#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "gperm/error.hpp"
#include "gperm/kdsi.hpp"
#include "gperm/permanent.hpp"

using namespace gperm;
using namespace gperm::test;

namespace {

IntMatrix random_matrix(int rows, int cols, std::mt19937_64& rng, int lo = -1, int hi = 1) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("small permanents by hand") {
  CHECK(permanent_exact(IntMatrix(0, 0)) == 1);
  CHECK(permanent_exact(IntMatrix::identity(5)) == 1);
  CHECK(permanent_exact(IntMatrix(4, 4, 1)) == 24);
  CHECK(permanent_exact(IntMatrix::from_rows({{1, 2}, {3, 4}})) == 10);
  CHECK(permanent_mod(IntMatrix::from_rows({{1, 2}, {3, 4}}), 7) == 3);
}

TEST_CASE("Ryser agrees with the permutation sum") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 7;
    const IntMatrix m = random_matrix(n, n, rng, -2, 2);
    const BigInt expect = naive_permanent(m);
    CHECK(permanent_exact(m) == expect);
    for (int p : {2, 3, 5, 9}) CHECK(permanent_mod(m, p) == mod_floor(expect, p));
  }
}

TEST_CASE("row and column permutations and negations") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(6, 6, rng);
    const BigInt p = permanent_exact(m);
    m.swap_rows(0, 4);
    m.swap_cols(1, 5);
    CHECK(permanent_exact(m) == p);
    m.negate_row(2);
    CHECK(permanent_exact(m) == -p);
  }
}

TEST_CASE("a row repeated r times contributes a factor r!") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix base = random_matrix(6, 6, rng);
    for (int r = 1; r < 4; ++r)
      for (int c = 0; c < 6; ++c) base(r, c) = base(0, c);
    CHECK(permanent_exact(base) % 24 == 0);
  }
}

TEST_CASE("permanent and determinant agree mod 2") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = random_matrix(8, 8, rng);
    CHECK(permanent_mod(m, 2) == det_mod(m, 2));
  }
}

TEST_CASE("a zero block wider than its rows forces a zero permanent") {
  // Rows 0..2 are nonzero only in columns 0..1: three rows cannot be matched
  // into two columns.
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = random_matrix(7, 7, rng);
    for (int r = 0; r < 3; ++r)
      for (int c = 2; c < 7; ++c) m(r, c) = 0;
    CHECK(permanent_exact(m) == 0);
  }
}

TEST_CASE("overflow and size limits") {
  CHECK_THROWS_AS(permanent_exact(IntMatrix(2, 3)), PreconditionError);
  CHECK_THROWS_AS(permanent_exact(IntMatrix(kMaxExactSide + 1, kMaxExactSide + 1)), LimitError);
  CHECK_THROWS_AS(permanent_mod(IntMatrix(kMaxModularSide + 1, kMaxModularSide + 1), 3),
                  LimitError);
  // 24! * 1e12 overflows 128 bits.
  CHECK_THROWS_AS(permanent_exact(IntMatrix(24, 24, 1'000'000'000'000)), OverflowError);
}

TEST_CASE("BigInt text round trip") {
  const BigInt big = BigInt(1) << 100;
  CHECK(parse_bigint(to_string(big)) == big);
  CHECK(parse_bigint(to_string(-big)) == -big);
  CHECK(to_string(BigInt(-42)) == "-42");
  CHECK(mod_floor(BigInt(-4), 3) == 2);
}

TEST_CASE("kDSI layout matches a direct construction") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + trial % 3;
    const Multigraph g = random_balanced_graph(4 + trial % 3, k, rng);
    const Orientation o = random_orientation(g, rng);
    const Vertex s = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.vertex_count()));
    const KdsiMatrix kd = build_kdsi(g, o, s, k);
    CHECK(kd.matrix == kdsi_oracle(g, o, s, k));
    CHECK(kd.is_square());
  }
  const Multigraph k4 = complete_graph(4);
  const KdsiMatrix kd = build_kdsi(k4, Orientation::natural(k4), 0, 2);
  CHECK(kd.matrix.rows() == 6);
  CHECK(kd.matrix.cols() == 6);
  CHECK(permanent_exact(kd.matrix) == 0);
}

TEST_CASE("block reduction preserves the permanent mod k+1") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + trial % 4;
    const int n = k == 4 ? 4 : 5;
    const Multigraph g = random_balanced_graph(n, k, rng);
    const Orientation o = random_orientation(g, rng);
    const KdsiMatrix kd = build_kdsi(g, o, 0, k);
    const ReducedForm rf = block_reduce(kd);
    CHECK(rf.residue() == permanent_mod(kd.matrix, k + 1));
    CHECK(rf.reduced.rows() == (k - 1) * (n - 1));
  }
}
