#include "clutter_algebra/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "clutter_algebra/errors.hpp"

namespace clutter_algebra {

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
}

void swap_cols(IntMatrix& a, std::size_t j, std::size_t k) {
  if (j == k) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, j), a(i, k));
}

// row_i += q * row_k
void add_row(IntMatrix& a, std::size_t i, std::size_t k, const Integer& q) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (sgn(a(k, j))) a(i, j) += q * a(k, j);
}

void add_col(IntMatrix& a, std::size_t j, std::size_t k, const Integer& q) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (sgn(a(i, k))) a(i, j) += q * a(i, k);
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) throw InvalidInput("zero matrix");
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix d = m, left = IntMatrix::identity(rows), right = IntMatrix::identity(cols);
  std::size_t t = 0;
  Integer q;
  for (; t < std::min(rows, cols); ++t) {
    // least absolute value in the trailing block
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(d(i, j)) && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) pi = i, pj = j;
    if (pi == rows) break;
    swap_rows(d, t, pi), swap_rows(left, t, pi);
    swap_cols(d, t, pj), swap_cols(right, t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row(d, i, t, -q), add_row(left, i, t, -q);
        if (sgn(d(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col(d, j, t, -q), add_col(right, j, t, -q);
        if (sgn(d(t, j))) clean = false;
      }
      if (!clean) {
        // a remainder is smaller than the pivot; bring it in and repeat
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(d(i, t)) && abs(d(i, t)) < abs(d(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(d(t, j)) && abs(d(t, j)) < abs(d(bi, bj))) bi = t, bj = j;
        swap_rows(d, t, bi), swap_rows(left, t, bi);
        swap_cols(d, t, bj), swap_cols(right, t, bj);
        continue;
      }
      // divisibility of the trailing block by the pivot
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(d, t, bad, 1), add_row(left, t, bad, 1);
    }
    if (sgn(d(t, t)) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) left(t, j) = -left(t, j);
    }
  }
  SnfResult r;
  r.rank = t;
  for (std::size_t i = 0; i < t; ++i) r.diag.push_back(d(i, i));
  r.left = std::move(left);
  r.right = std::move(right);
  return r;
}

Integer delta_r(const IntMatrix& m, std::size_t r) {
  auto s = snf(m);
  if (r < 1 || r > s.rank)
    throw InvalidInput("delta_r: r = " + std::to_string(r) + " outside 1.." + std::to_string(s.rank));
  Integer p = 1;
  for (std::size_t i = 0; i < r; ++i) p *= s.diag[i];
  return p;
}

LatticeQuotient lattice_quotient(const IntMatrix& m) {
  auto s = snf(m);
  LatticeQuotient q;
  q.free_rank = m.rows() - s.rank;
  for (const auto& d : s.diag)
    if (d > 1) q.torsion.push_back(d);
  return q;
}

std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw InvalidInput("solve_integral: dimension mismatch");
  if (m.is_zero()) {
    if (!is_zero(b)) return std::nullopt;
    return IntVector(m.cols(), Integer(0));
  }
  auto s = snf(m);
  IntVector lb = s.left * b;
  IntVector y(m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(lb[i].get_mpz_t(), s.diag[i].get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), lb[i].get_mpz_t(), s.diag[i].get_mpz_t());
    } else if (sgn(lb[i])) {
      return std::nullopt;
    }
  }
  IntVector x = s.right * y;
  if (m * x != b) throw CrossCheckFailure("solve_integral: back-substitution mismatch");
  return x;
}

namespace {

// Fraction-free elimination; returns rank and (for square input) the determinant.
std::pair<std::size_t, Integer> bareiss(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      swap_rows(a, p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  Integer det = 0;
  if (rows == cols && r == rows) det = sign * a(rows - 1, cols - 1);
  return {r, det};
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(m).first;
}

std::size_t rank(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors));
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  return bareiss(m).second;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  std::vector<IntVector> out;
  if (m.is_zero()) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      IntVector e(m.cols(), Integer(0));
      e[j] = 1;
      out.push_back(e);
    }
    return out;
  }
  auto s = snf(m);
  for (std::size_t j = s.rank; j < m.cols(); ++j) out.push_back(s.right.column(j));
  return out;
}

std::vector<std::size_t> independent_subset(const std::vector<IntVector>& vectors) {
  std::vector<std::size_t> picked;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    rows.push_back(vectors[i]);
    if (rank(rows) == rows.size())
      picked.push_back(i);
    else
      rows.pop_back();
  }
  return picked;
}

}  // namespace clutter_algebra
