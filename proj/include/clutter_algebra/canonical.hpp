#pragma once

#include <optional>
#include <vector>

#include "clutter_algebra/clutter.hpp"
#include "clutter_algebra/lattice.hpp"
#include "clutter_algebra/symbolic.hpp"

namespace clutter_algebra {

// A maximal vertex l of P = {x >= 0 : xA <= 1} with the least d > 0 making
// (-d l, d) integral; the entries of that vector are then coprime.
struct MaximalVertexDatum {
  RatVector ell;
  Integer d;
  Rational norm;  // <l, 1>
};

// Requires a nonnegative A without zero rows or columns.
std::vector<MaximalVertexDatum> maximal_vertices(const IntMatrix& a);

// The subring S = K[x^w t : w <= v_i] of a system x >= 0; xA <= 1 with the
// rounding property.  Every call below checks that property first and
// throws InvalidInput("system lacks rounding property") otherwise.
struct CanonicalModule {
  // Columns (-d_i l_i, d_i) followed by (e_j, 0); x^a t^b is in the module
  // iff (a, b) times this matrix is >= 1 entrywise.
  IntMatrix halfspace_system;
  std::vector<MonomialGen> generators;  // minimal, up to degree_bound
  Integer a_invariant;
  Integer degree_bound;
};

// -max_i ceil(1/d_i + |l_i|), checked against the least interior degree.
Integer a_invariant_S(const IntMatrix& a);
CanonicalModule canonical_module_gens(const IntMatrix& a, const Integer& b_max);

// Ladder: integral P decides exactly; otherwise the sufficient condition
// -a(S) = 1/d_i + |l_i| for all i; otherwise principality of the canonical
// module up to degree -a(S) + n + 1.  The basis names the deciding rung.
Verdict is_gorenstein_S(const IntMatrix& a);

// Extended Rees algebra R[It, t^-1] of a graph as a subring of this shape:
// the columns are e_1..e_n followed by the edge vectors.
IntMatrix extended_rees_system(const Clutter& g);

// Canonical module of K[x^v : v in gens] for a normal generating set, graded
// by a rational x0 with <x0, v> = 1 on every generator.  Generators of the
// module are reported up to grading value degree_bound (default: the larger
// of rank + 1 and the number of extreme rays).
struct GeneralCanonical {
  std::vector<IntVector> generators;  // sorted by grading value, then lex
  Rational a_invariant;
  Rational degree_bound;
};
GeneralCanonical canonical_module_general(const std::vector<IntVector>& gens, const RatVector& grading,
                                          const std::optional<Rational>& degree_bound = std::nullopt);

// Subring of the clique monomials of a perfect graph: system from the
// maximal independent sets, a(S) = -(max |a_i| + 1).
CanonicalModule perfect_graph_canonical(const Clutter& g);

// K[G] for a connected graph is a complete intersection iff G is bipartite
// with q - n + 1 primitive cycles.
Verdict complete_intersection_bipartite(const Clutter& g);

}  // namespace clutter_algebra
