#include "gperm/matrix.hpp"

#include <sstream>
#include <utility>

#include "gperm/error.hpp"

namespace gperm {

IntMatrix::IntMatrix(int rows, int cols, std::int64_t fill)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw PreconditionError("matrix dimensions must be nonnegative");
  }
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
               fill);
}

IntMatrix IntMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw PreconditionError("ragged rows in matrix literal");
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::span<const std::int64_t> IntMatrix::row(int r) const {
  return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)};
}

std::span<std::int64_t> IntMatrix::row(int r) {
  return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)};
}

IntMatrix IntMatrix::stacked(int copies) const {
  IntMatrix out(rows_ * copies, cols_);
  for (int b = 0; b < copies; ++b) {
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) out(b * rows_ + r, c) = (*this)(r, c);
    }
  }
  return out;
}

IntMatrix IntMatrix::row_block(int first, int count) const {
  IntMatrix out(count, cols_);
  for (int r = 0; r < count; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
  }
  return out;
}

IntMatrix IntMatrix::select_columns(std::span<const int> columns) const {
  IntMatrix out(rows_, static_cast<int>(columns.size()));
  for (int r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out(r, static_cast<int>(c)) = (*this)(r, columns[c]);
    }
  }
  return out;
}

IntMatrix IntMatrix::select_rows(std::span<const int> rows) const {
  IntMatrix out(static_cast<int>(rows.size()), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < cols_; ++c) out(static_cast<int>(r), c) = (*this)(rows[r], c);
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::negate_row(int r) {
  for (auto& x : row(r)) x = -x;
}

void IntMatrix::negate_col(int c) {
  for (int r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::add_row_multiple(int target, int source, std::int64_t factor) {
  for (int c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) out << ' ';
      out << (*this)(r, c);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace gperm
