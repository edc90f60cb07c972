#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "clutter_algebra/integer.hpp"

namespace clutter_algebra {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  // Columns become the matrix columns; `rows` is needed when the list is empty.
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> row_list() const;
  std::vector<IntVector> column_list() const;

  IntMatrix transpose() const;
  // Appends a row at the bottom.
  IntMatrix stacked(const IntVector& row) const;
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  bool is_binary() const;
  bool is_nonnegative() const;
  bool has_zero_row() const;
  bool has_zero_column() const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);

// Text format: "rows cols" then one row per line; '#' starts a comment.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& m);

}  // namespace clutter_algebra
