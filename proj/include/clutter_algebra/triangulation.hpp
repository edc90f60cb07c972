#pragma once

#include <vector>

#include "clutter_algebra/integer.hpp"

namespace clutter_algebra {

struct Triangulation {
  std::vector<std::vector<std::size_t>> simplices;  // sorted index sets into the configuration
  RatVector weights;  // empty for a placing triangulation
  std::size_t pulled_cells = 0;  // lower facets that needed lexicographic pulling
};

// Regular triangulation of cone(points) induced by lifting point i to height
// weights[i] and projecting the lower facets.  Non-simplicial lower facets
// are refined by pulling their vertices in index order.  Requires the points
// to span the ambient space.
Triangulation lifted_triangulation(const std::vector<IntVector>& points, const RatVector& weights);

// Placing triangulation of cone(points): points are inserted in order and
// each one is coned over the boundary facets it sees.  Works in the linear
// span, so the points need not be full-dimensional.
Triangulation placing_triangulation(const std::vector<IntVector>& points);

// Does the simplex generate the same lattice as all the points?
bool is_unimodular_simplex(const std::vector<IntVector>& points, const std::vector<std::size_t>& simplex);

}  // namespace clutter_algebra
