#include "clutter_algebra/triangulation.hpp"

#include <algorithm>
#include <map>

#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/exact_linalg.hpp"
#include "clutter_algebra/polyhedra.hpp"

namespace clutter_algebra {

namespace {

std::vector<std::vector<std::size_t>> pull(const std::vector<IntVector>& points,
                                           const std::vector<std::size_t>& cell) {
  std::vector<IntVector> vs;
  for (auto i : cell) vs.push_back(points[i]);
  if (rank(vs) == cell.size()) return {cell};
  const std::size_t apex = cell.front();
  ConeRep c = cone_irreducible_rep(vs);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& normal : c.facet_normals) {
    std::vector<std::size_t> face;
    for (auto i : cell)
      if (sgn(dot(normal, points[i])) == 0) face.push_back(i);
    if (std::find(face.begin(), face.end(), apex) != face.end()) continue;
    for (auto s : pull(points, face)) {
      s.push_back(apex);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

// Signed volume form on Z^k restricted to a facet: the cofactor vector.
Point facet_normal(const std::vector<Point>& facet, std::size_t k) {
  IntMatrix m(k - 1, k);
  for (std::size_t i = 0; i + 1 < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = Integer(static_cast<long>(facet[i][j]));
  auto ker = integer_kernel(m);
  if (ker.size() != 1) throw CrossCheckFailure("placing triangulation: facet is not of full rank");
  return to_small(primitive_oriented(ker[0]));
}

}  // namespace

Triangulation lifted_triangulation(const std::vector<IntVector>& points, const RatVector& weights) {
  if (points.empty()) throw InvalidInput("degenerate configuration");
  if (weights.size() != points.size()) throw InvalidInput("one weight per point is required");
  const std::size_t d = points[0].size();
  for (const auto& p : points) {
    if (p.size() != d) throw InvalidInput("points have different dimensions");
    if (is_zero(p)) throw InvalidInput("points must be nonzero");
  }
  if (rank(points) != d) throw InvalidInput("degenerate configuration");
  std::vector<IntVector> lifted;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Integer den = weights[i].get_den();
    IntVector v;
    for (const auto& x : points[i]) v.push_back(x * den);
    v.push_back(weights[i].get_num());
    lifted.push_back(std::move(v));
  }
  IntVector up(d + 1, Integer(0));
  up.back() = 1;
  lifted.push_back(up);
  ConeRep c = cone_irreducible_rep(lifted);
  Triangulation t;
  t.weights = weights;
  for (const auto& normal : c.facet_normals) {
    if (sgn(normal.back()) <= 0) continue;
    std::vector<std::size_t> cell;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (sgn(dot(normal, lifted[i])) == 0) cell.push_back(i);
    if (cell.size() > d) ++t.pulled_cells;
    for (auto& s : pull(points, cell)) t.simplices.push_back(std::move(s));
  }
  std::sort(t.simplices.begin(), t.simplices.end());
  return t;
}

Triangulation placing_triangulation(const std::vector<IntVector>& points) {
  Triangulation t;
  if (points.empty()) return t;
  const std::size_t d = points[0].size();
  for (const auto& p : points) {
    if (p.size() != d) throw InvalidInput("points have different dimensions");
  }
  const auto basis = independent_subset(points);
  const std::size_t k = basis.size();
  if (k == 0) return t;
  // coordinates on which the span projects isomorphically
  IntMatrix pm = IntMatrix::from_rows(points);
  const auto coords = independent_subset(pm.transpose().row_list());
  std::vector<Point> proj;
  for (const auto& p : points) {
    Point v;
    for (auto c : coords) v.push_back(to_small(p[c]));
    proj.push_back(std::move(v));
  }

  struct FacetRec {
    std::size_t opposite;
    Point normal;
  };
  std::map<std::vector<std::size_t>, FacetRec> boundary;
  auto add_simplex = [&](std::vector<std::size_t> s) {
    std::sort(s.begin(), s.end());
    for (std::size_t j = 0; j < s.size(); ++j) {
      std::vector<std::size_t> f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != j) f.push_back(s[i]);
      auto it = boundary.find(f);
      if (it != boundary.end()) {
        boundary.erase(it);
        continue;
      }
      FacetRec rec;
      rec.opposite = s[j];
      if (k == 1) {
        rec.normal = proj[s[j]];
      } else {
        std::vector<Point> fv;
        for (auto i : f) fv.push_back(proj[i]);
        rec.normal = facet_normal(fv, k);
        if (checked_dot(rec.normal, proj[s[j]]) < 0)
          for (auto& x : rec.normal) x = -x;
      }
      boundary.emplace(std::move(f), std::move(rec));
    }
    t.simplices.push_back(std::move(s));
  };
  add_simplex(basis);
  std::vector<char> used(points.size(), 0);
  for (auto i : basis) used[i] = 1;
  for (std::size_t v = 0; v < points.size(); ++v) {
    if (used[v] || is_zero(points[v])) continue;
    std::vector<std::vector<std::size_t>> visible;
    for (const auto& [f, rec] : boundary)
      if (checked_dot(rec.normal, proj[v]) < 0) visible.push_back(f);
    for (auto& f : visible) {
      f.push_back(v);
      add_simplex(std::move(f));
    }
    if (t.simplices.size() > max_cells())
      throw CapExceeded("triangulation exceeded the cell cap (CLUTTER_ALGEBRA_MAX_CELLS)");
  }
  std::sort(t.simplices.begin(), t.simplices.end());
  return t;
}

bool is_unimodular_simplex(const std::vector<IntVector>& points, const std::vector<std::size_t>& simplex) {
  if (points.empty() || simplex.empty()) throw InvalidInput("empty simplex");
  std::vector<IntVector> sv;
  for (auto i : simplex) {
    if (i >= points.size()) throw InvalidInput("simplex index out of range");
    sv.push_back(points[i]);
  }
  if (rank(sv) != sv.size()) throw InvalidInput("simplex is linearly dependent");
  const std::size_t d = points[0].size();
  const std::size_t r = rank(points);
  if (r != sv.size()) return false;
  IntMatrix all = IntMatrix::from_columns(points, d);
  IntMatrix sub = IntMatrix::from_columns(sv, d);
  return delta_r(sub, r) == delta_r(all, r);
}

}  // namespace clutter_algebra
