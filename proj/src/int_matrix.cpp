#include "clutter_algebra/int_matrix.hpp"

#include <istream>
#include <sstream>

#include "clutter_algebra/errors.hpp"

namespace clutter_algebra {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InvalidInput("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InvalidInput("ragged matrix columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<IntVector> IntMatrix::column_list() const {
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::stacked(const IntVector& r) const {
  if (r.size() != cols_) throw InvalidInput("stacked row has wrong length");
  IntMatrix m(rows_ + 1, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t j = 0; j < cols_; ++j) m(rows_, j) = r[j];
  return m;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= cols_) throw InvalidInput("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, idx[k]);
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (sgn(x)) return false;
  return true;
}

bool IntMatrix::is_binary() const {
  for (const auto& x : entries_)
    if (x != 0 && x != 1) return false;
  return true;
}

bool IntMatrix::is_nonnegative() const {
  for (const auto& x : entries_)
    if (sgn(x) < 0) return false;
  return true;
}

bool IntMatrix::has_zero_row() const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (clutter_algebra::is_zero(row(i))) return true;
  return false;
}

bool IntMatrix::has_zero_column() const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (clutter_algebra::is_zero(column(j))) return true;
  return false;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j))) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw InvalidInput("matrix-vector dimension mismatch");
  IntVector y(a.rows(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) && sgn(x[j])) y[i] += a(i, j) * x[j];
  return y;
}

namespace {

std::vector<std::string> tokens_without_comments(std::istream& in) {
  std::vector<std::string> tok;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) tok.push_back(t);
  }
  return tok;
}

Integer parse_integer(const std::string& t) {
  Integer x;
  if (x.set_str(t, 10) != 0) throw InvalidInput("not an integer: '" + t + "'");
  return x;
}

}  // namespace

IntMatrix parse_matrix(std::istream& in) {
  auto tok = tokens_without_comments(in);
  if (tok.size() < 2) throw InvalidInput("matrix header 'rows cols' missing");
  Integer r = parse_integer(tok[0]), c = parse_integer(tok[1]);
  if (r <= 0 || c <= 0 || r > 100000 || c > 100000)
    throw InvalidInput("matrix dimensions must be positive");
  std::size_t rows = r.get_ui(), cols = c.get_ui();
  if (tok.size() != 2 + rows * cols)
    throw InvalidInput("matrix has " + std::to_string(tok.size() - 2) + " entries, expected " +
                       std::to_string(rows * cols));
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_integer(tok[2 + i * cols + j]);
  return m;
}

IntMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) out << to_string(m.row(i)) << '\n';
  return out.str();
}

}  // namespace clutter_algebra
