#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gperm {

/// Dense row-major integer matrix. Entries are small in practice
/// (-1/0/+1 for incidence matrices), but stored as 64-bit.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, std::int64_t fill = 0);

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }
  std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }

  std::span<const std::int64_t> row(int r) const;
  std::span<std::int64_t> row(int r);

  /// `copies` vertical copies of this matrix.
  IntMatrix stacked(int copies) const;
  /// Rows [first, first + count).
  IntMatrix row_block(int first, int count) const;
  /// Columns in the given order.
  IntMatrix select_columns(std::span<const int> columns) const;
  IntMatrix select_rows(std::span<const int> rows) const;
  IntMatrix transposed() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int r);
  void negate_col(int c);
  /// row[target] += factor * row[source]
  void add_row_multiple(int target, int source, std::int64_t factor);

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace gperm
