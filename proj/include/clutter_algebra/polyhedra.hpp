#pragma once

#include <optional>
#include <vector>

#include "clutter_algebra/certificate.hpp"
#include "clutter_algebra/int_matrix.hpp"

namespace clutter_algebra {

// <normal, x> >= offset
struct Inequality {
  IntVector normal;
  Integer offset;
  bool operator==(const Inequality&) const = default;
};

struct Polyhedron {
  std::size_t dim = 0;
  bool empty = false;
  std::vector<Inequality> inequalities;
  std::vector<RatVector> vertices;  // lexicographic order
  std::vector<IntVector> rays;  // primitive
  std::vector<IntVector> lineality;

  bool bounded() const { return rays.empty() && lineality.empty(); }
};

struct ConeRep {
  std::size_t dim = 0;
  std::vector<IntVector> generators;  // extreme rays, primitive
  std::vector<IntVector> facet_normals;  // primitive, lexicographic
  std::vector<IntVector> equations;  // the cone lies in their common kernel
  std::vector<IntVector> lineality;

  bool pointed() const { return lineality.empty(); }
  bool full_dimensional() const { return equations.empty(); }
  bool contains(const IntVector& x) const;
};

// Cone {x : <h, x> >= 0 for all h} as extreme rays plus a lineality basis.
struct RayRep {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};
RayRep extreme_rays(std::size_t dim, const std::vector<IntVector>& halfspaces);

Polyhedron polyhedron_from_inequalities(std::size_t dim, const std::vector<Inequality>& ineqs);
Polyhedron polyhedron_from_generators(std::size_t dim, const std::vector<RatVector>& vertices,
                                      const std::vector<IntVector>& rays,
                                      const std::vector<IntVector>& lineality = {});
// Uses the generators when any are present, otherwise the inequalities.
Polyhedron dual_description(const Polyhedron& input);

ConeRep cone_irreducible_rep(const std::vector<IntVector>& generators);
ConeRep cone_from_halfspaces(std::size_t dim, const std::vector<IntVector>& halfspaces);

// Q(A) = {x >= 0 : xA >= 1} and P = {x >= 0 : xA <= 1} for a nonnegative A
// whose columns are v_1..v_q in R^rows.
Polyhedron covering_polyhedron(const IntMatrix& a);
Polyhedron packing_polytope(const IntMatrix& a);

// True iff every vertex is integral; otherwise carries a fractional vertex.
Verdict is_integral(const Polyhedron& p);

enum class Membership { closure, relative_interior };
bool membership(const Polyhedron& p, const RatVector& x, Membership mode);

// Inequalities that hold with equality on all of p.
std::vector<bool> implicit_equalities(const Polyhedron& p);

Json to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const Json& j);

}  // namespace clutter_algebra
