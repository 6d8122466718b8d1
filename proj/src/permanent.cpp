#include "gperm/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gperm/error.hpp"

namespace gperm {
namespace {

void check_square(const IntMatrix& m, int limit) {
  if (!m.is_square()) {
    throw PreconditionError("permanent needs a square matrix, got " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()));
  }
  if (m.rows() > limit) {
    throw LimitError("matrix side " + std::to_string(m.rows()) + " exceeds the bound " +
                     std::to_string(limit));
  }
}

BigInt checked_mul(BigInt a, BigInt b) {
  BigInt out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("permanent exceeds 128-bit range");
  return out;
}

BigInt checked_add(BigInt a, BigInt b) {
  BigInt out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("permanent exceeds 128-bit range");
  return out;
}

std::int64_t reduce(std::int64_t x, std::int64_t modulus) {
  x %= modulus;
  return x < 0 ? x + modulus : x;
}

}  // namespace

std::string to_string(BigInt value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work on the negative side so the minimum value is representable.
  std::string digits;
  BigInt v = negative ? value : -value;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer");
  std::size_t i = 0;
  const bool negative = text[0] == '-';
  if (negative || text[0] == '+') ++i;
  if (i == text.size()) throw ParseError("empty integer");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("bad integer '" + text + "'");
    v = checked_add(checked_mul(v, 10), negative ? -(text[i] - '0') : (text[i] - '0'));
  }
  return v;
}

std::int64_t mod_floor(BigInt value, std::int64_t modulus) {
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<std::int64_t>(r);
}

BigInt permanent_exact(const IntMatrix& m) {
  check_square(m, kMaxExactSide);
  const int n = m.rows();
  if (n == 0) return 1;

  // Perm(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij, with S walked in
  // Gray-code order so each step adds or removes one column.
  std::vector<std::int64_t> row_sum(static_cast<std::size_t>(n), 0);
  BigInt total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const int col = std::countr_zero(step);
    const std::uint64_t gray = step ^ (step >> 1);
    const bool added = ((gray >> col) & 1U) != 0;
    for (int i = 0; i < n; ++i) row_sum[i] += added ? m(i, col) : -m(i, col);

    BigInt prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod = checked_mul(prod, row_sum[i]);
    if (prod == 0) continue;
    total = checked_add(total, (std::popcount(gray) & 1) ? -prod : prod);
  }
  return (n & 1) ? -total : total;
}

std::int64_t permanent_mod(const IntMatrix& m, std::int64_t modulus) {
  if (modulus < 2) throw PreconditionError("modulus must be at least 2");
  check_square(m, kMaxModularSide);
  const int n = m.rows();
  if (n == 0) return 1 % modulus;

  std::vector<std::int64_t> entries(static_cast<std::size_t>(n) * n);
  std::vector<std::int64_t> negated(entries.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto r = reduce(m(i, j), modulus);
      entries[static_cast<std::size_t>(j) * n + i] = r;
      negated[static_cast<std::size_t>(j) * n + i] = r == 0 ? 0 : modulus - r;
    }
  }
  std::vector<std::int64_t> row_sum(static_cast<std::size_t>(n), 0);
  std::int64_t total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const int col = std::countr_zero(step);
    const std::uint64_t gray = step ^ (step >> 1);
    const auto* delta = (((gray >> col) & 1U) != 0 ? entries : negated).data() +
                        static_cast<std::size_t>(col) * n;
    for (int i = 0; i < n; ++i) {
      row_sum[i] += delta[i];
      if (row_sum[i] >= modulus) row_sum[i] -= modulus;
    }
    std::int64_t prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) {
      prod = static_cast<std::int64_t>(static_cast<BigInt>(prod) * row_sum[i] % modulus);
    }
    if (prod == 0) continue;
    total += (std::popcount(gray) & 1) ? modulus - prod : prod;
    if (total >= modulus) total -= modulus;
  }
  return (n & 1) ? reduce(-total, modulus) : total;
}

std::int64_t ReducedForm::residue() const {
  const std::int64_t modulus = k + 1;
  std::int64_t value = permanent_mod(reduced, modulus);
  for (int i = 0; i < scalar_exponent; ++i) value = value * k % modulus;
  return sign < 0 ? (modulus - value) % modulus : value;
}

ReducedForm block_reduce(const KdsiMatrix& kdsi) {
  if (!kdsi.is_square()) throw PreconditionError("block_reduce needs a square kDSI matrix");
  IntMatrix b = kdsi.block();
  const int n = kdsi.block_rows;
  const int cols = b.cols();

  ReducedForm out;
  out.k = kdsi.k;
  int negations = 0;
  int r = 0;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c = 0; c < cols && r < n; ++c) {
    int p = r;
    while (p < n && b(p, c) == 0) ++p;
    if (p == n) continue;
    b.swap_rows(r, p);
    if (b(r, c) != 1 && b(r, c) != -1) {
      throw Error("non-unit pivot; the block is not an incidence matrix");
    }
    if (b(r, c) == -1) {
      b.negate_row(r);
      ++negations;
    }
    for (int i = 0; i < n; ++i) {
      if (i != r && b(i, c) != 0) b.add_row_multiple(i, r, -b(i, c));
    }
    out.pivot_columns.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  if (r < n) throw PreconditionError("graph is disconnected: no unit pivot set");

  for (int c = 0; c < cols; ++c) {
    if (!is_pivot[c]) out.other_columns.push_back(c);
  }
  out.a = b.select_columns(out.other_columns);
  out.reduced = out.a.stacked(kdsi.k - 1);
  out.scalar_exponent = n;
  // Negating a row in every block multiplies the permanent by (-1)^k.
  out.sign = (static_cast<long long>(negations) * kdsi.k) % 2 == 0 ? 1 : -1;
  return out;
}

}  // namespace gperm
