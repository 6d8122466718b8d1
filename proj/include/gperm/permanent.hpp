#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gperm/kdsi.hpp"
#include "gperm/matrix.hpp"

namespace gperm {

/// Wide signed integer for exact permanents.
using BigInt = __int128;

std::string to_string(BigInt value);
BigInt parse_bigint(const std::string& text);
/// Residue of `value` in [0, modulus).
std::int64_t mod_floor(BigInt value, std::int64_t modulus);

/// Largest side accepted by the exact kernel.
inline constexpr int kMaxExactSide = 24;
/// Largest side accepted by the modular kernel.
inline constexpr int kMaxModularSide = 30;

/// Exact permanent by Ryser's inclusion-exclusion with Gray-code column
/// updates, O(2^n n). Accumulates in 128 bits and throws OverflowError
/// rather than wrapping.
BigInt permanent_exact(const IntMatrix& m);

/// Permanent reduced into [0, modulus); every intermediate stays a residue.
std::int64_t permanent_mod(const IntMatrix& m, std::int64_t modulus);

/// A kDSI matrix after pivoting one block to [I A] (the same row operations
/// applied in every block).
///
/// Perm(kDSI) == sign * k^scalar_exponent * Perm(reduced)   (mod k+1)
///
/// where `reduced` is (k-1) stacked copies of `a`. The congruence is all that
/// is promised; row additions do not preserve the exact value.
struct ReducedForm {
  int k = 1;
  IntMatrix a;        // block_rows x (k-1)*block_rows
  IntMatrix reduced;  // square, (k-1) copies of a
  int scalar_exponent = 0;
  int sign = 1;
  /// Columns of the original matrix that became the identity (a spanning
  /// tree when the matrix comes from a connected graph), in pivot order.
  std::vector<int> pivot_columns;
  /// The remaining columns, in the order they appear in `a`.
  std::vector<int> other_columns;

  /// Perm(kDSI) mod (k+1) evaluated through the reduced form.
  std::int64_t residue() const;
};

ReducedForm block_reduce(const KdsiMatrix& kdsi);

}  // namespace gperm
