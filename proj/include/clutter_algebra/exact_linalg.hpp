#pragma once

#include <optional>
#include <vector>

#include "clutter_algebra/int_matrix.hpp"

namespace clutter_algebra {

struct SnfResult {
  IntVector diag;  // d_1 | d_2 | ... | d_r, all positive
  IntMatrix left;  // unimodular, rows x rows
  IntMatrix right;  // unimodular, cols x cols
  std::size_t rank = 0;
};

struct LatticeQuotient {
  std::size_t free_rank = 0;
  IntVector torsion;  // invariant factors > 1
};

// left * m * right is diagonal with the invariant factors.  Pivots on the
// entry of least absolute value.  Throws InvalidInput("zero matrix").
SnfResult snf(const IntMatrix& m);

// gcd of the nonzero r x r minors, read off the invariant factors.
Integer delta_r(const IntMatrix& m, std::size_t r);

// Z^rows / (column lattice).
LatticeQuotient lattice_quotient(const IntMatrix& m);

// Integral x with m x = b, or nullopt when b is not in the column lattice.
std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& b);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const std::vector<IntVector>& vectors);
Integer determinant(const IntMatrix& m);

// Basis of {x in Z^cols : m x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

// Indices of a maximal linearly independent subset, chosen greedily in order.
std::vector<std::size_t> independent_subset(const std::vector<IntVector>& vectors);

}  // namespace clutter_algebra
