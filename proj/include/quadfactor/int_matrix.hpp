#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace quadfactor {

/// Dense exact integer matrix, row-major. Shapes with zero rows or zero
/// columns are ordinary values: products against them follow the usual
/// conventions (an n x 0 times 0 x m product is the n x m zero matrix).
class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows);

  static IntMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntMatrix identity(std::size_t n);
  /// n x m matrix with ones at (i, i).
  static IntMatrix defective_identity(std::size_t rows, std::size_t cols);
  /// Square diagonal matrix with the given diagonal.
  static IntMatrix diagonal(std::span<const value_type> diag);
  static IntMatrix from_rows(const std::vector<std::vector<value_type>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  value_type operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<value_type> row(std::size_t r) const;
  std::vector<std::vector<value_type>> to_rows() const;

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& m);

  /// Result(i, j) = (*this)(row_order[i], col_order[j]).
  IntMatrix select(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const;

  std::vector<value_type> apply(std::span<const value_type> x) const;

  std::size_t count_nonzero() const;
  value_type max_abs() const;
  /// True if every entry lies in {-1, 0, 1}.
  bool entries_unit_bounded() const;
  bool is_lower_triangular() const;
  bool is_upper_triangular() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

/// Block diagonal matrix; blocks may have zero rows or columns.
IntMatrix block_diagonal(std::span<const IntMatrix> blocks);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::string to_string(const IntMatrix& m);

}  // namespace quadfactor
