#pragma once

#include <optional>
#include <vector>

#include "clutter_algebra/certificate.hpp"
#include "clutter_algebra/execution.hpp"
#include "clutter_algebra/polyhedra.hpp"

namespace clutter_algebra {

struct HilbertBasis {
  ConeRep cone;
  std::vector<IntVector> elements;  // lexicographic
};

// Minimal integral Hilbert basis of a pointed cone (lattice Z^d ∩ span).
// Throws InvalidInput("cone has lineality") otherwise.
HilbertBasis hilbert_basis(const ConeRep& cone, Execution ex = Execution::parallel);
HilbertBasis hilbert_basis_of(const std::vector<IntVector>& generators, Execution ex = Execution::parallel);

// Is every lattice point of cone(vectors) a nonnegative integer combination
// of the vectors?  A failure carries an unreachable point.
Verdict is_hilbert_basis(const std::vector<IntVector>& vectors);

struct ComboWitness {
  std::vector<Integer> coefficients;  // indexed like the generators
};

std::optional<ComboWitness> semigroup_member(const std::vector<IntVector>& generators,
                                             const IntVector& target);

// Integer points of k*P in lexicographic order; P must be bounded.
std::vector<IntVector> lattice_points(const Polyhedron& p, const Integer& k = 1);

// Bounded falsifier for the integer decomposition property.  For unbounded P
// the points of kP are drawn from the box spanned by k times the vertices.
// A failure carries (k, a).
Verdict idp_check(const Polyhedron& p, std::size_t k_max);

// Lattice points x of the cone with <c, x> > 0 on the facets flagged in
// `strict`, degree <= b_max, and not of the form y + s with y such a point
// and s a nonzero lattice point of the cone.  Sorted by (degree, lex).
std::vector<IntVector> minimal_semigroup_elements(const ConeRep& cone, const std::vector<bool>& strict,
                                                  const IntVector& degree, const Integer& b_max);

}  // namespace clutter_algebra
