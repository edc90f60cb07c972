#include "clutter_algebra/polyhedra.hpp"

#include <algorithm>

#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/exact_linalg.hpp"
#include "dd_engine.hpp"

namespace clutter_algebra {

namespace {

template <class A>
RayRep run_dd(std::size_t dim, const std::vector<IntVector>& halfspaces) {
  detail::DoubleDescription<A> dd;
  dd.dim = dim;
  for (const auto& h : halfspaces) {
    if (h.size() != dim) throw InvalidInput("halfspace has wrong dimension");
    typename detail::DoubleDescription<A>::Vec v;
    for (const auto& x : h) v.push_back(A::from(x));
    dd.hs.push_back(std::move(v));
  }
  dd.run();
  RayRep out;
  for (const auto& r : dd.rays) {
    IntVector v;
    for (const auto& x : r) v.push_back(A::big(x));
    out.rays.push_back(primitive_oriented(std::move(v)));
  }
  for (const auto& l : dd.lineality) {
    IntVector v;
    for (const auto& x : l) v.push_back(A::big(x));
    out.lineality.push_back(primitive(std::move(v)));
  }
  std::sort(out.rays.begin(), out.rays.end());
  std::sort(out.lineality.begin(), out.lineality.end());
  return out;
}

bool rational_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<IntVector> with_negatives(const std::vector<IntVector>& vs) {
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    out.push_back(v);
    IntVector w = v;
    for (auto& x : w) x = -x;
    out.push_back(std::move(w));
  }
  return out;
}

bool is_unit_last(const IntVector& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (sgn(v[i])) return false;
  return sgn(v.back()) > 0;
}

// Irredundant inequalities of the polyhedron whose homogenization is
// generated by `gens` (+ lineality `lin`).
std::vector<Inequality> facets_of_homogenization(std::size_t dim, const std::vector<IntVector>& gens,
                                                 const std::vector<IntVector>& lin) {
  std::vector<IntVector> dual = gens;
  for (auto& v : with_negatives(lin)) dual.push_back(std::move(v));
  RayRep f = extreme_rays(dim + 1, dual);
  std::vector<Inequality> out;
  auto emit = [&](const IntVector& c) {
    Inequality q;
    q.normal.assign(c.begin(), c.end() - 1);
    q.offset = -c.back();
    out.push_back(std::move(q));
  };
  for (const auto& c : f.rays)
    if (!is_unit_last(c)) emit(c);
  for (const auto& e : with_negatives(f.lineality)) emit(e);
  std::sort(out.begin(), out.end(), [](const Inequality& a, const Inequality& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });
  return out;
}

void fill_generators(Polyhedron& p) {
  std::vector<IntVector> hs;
  for (const auto& q : p.inequalities) {
    if (q.normal.size() != p.dim) throw InvalidInput("inequality has wrong dimension");
    IntVector h = q.normal;
    h.push_back(-q.offset);
    hs.push_back(std::move(h));
  }
  IntVector s(p.dim + 1, Integer(0));
  s.back() = 1;
  hs.push_back(s);
  RayRep r = extreme_rays(p.dim + 1, hs);
  p.vertices.clear();
  p.rays.clear();
  p.lineality.clear();
  for (const auto& v : r.rays) {
    if (sgn(v.back()) > 0) {
      RatVector x;
      for (std::size_t i = 0; i < p.dim; ++i) x.emplace_back(v[i], v.back()), x.back().canonicalize();
      p.vertices.push_back(std::move(x));
    } else {
      p.rays.emplace_back(v.begin(), v.end() - 1);
    }
  }
  for (const auto& l : r.lineality) p.lineality.emplace_back(l.begin(), l.end() - 1);
  p.empty = p.vertices.empty();
  if (p.empty) {
    p.rays.clear();
    p.lineality.clear();
  }
  std::sort(p.vertices.begin(), p.vertices.end(), rational_less);
  std::sort(p.rays.begin(), p.rays.end());
}

std::vector<IntVector> homogenized_generators(const Polyhedron& p) {
  std::vector<IntVector> gens;
  for (const auto& v : p.vertices) {
    Integer den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    IntVector g;
    for (const auto& x : v) g.push_back(x.get_num() * (den / x.get_den()));
    g.push_back(den);
    gens.push_back(primitive_oriented(std::move(g)));
  }
  for (const auto& r : p.rays) {
    IntVector g = r;
    g.push_back(0);
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<IntVector> homogenized_lineality(const Polyhedron& p) {
  std::vector<IntVector> lin;
  for (const auto& l : p.lineality) {
    IntVector g = l;
    g.push_back(0);
    lin.push_back(std::move(g));
  }
  return lin;
}

}  // namespace

RayRep extreme_rays(std::size_t dim, const std::vector<IntVector>& halfspaces) {
  try {
    return run_dd<detail::WordArith>(dim, halfspaces);
  } catch (const WordOverflow&) {
    return run_dd<detail::BigArith>(dim, halfspaces);
  }
}

Polyhedron polyhedron_from_inequalities(std::size_t dim, const std::vector<Inequality>& ineqs) {
  Polyhedron p;
  p.dim = dim;
  p.inequalities = ineqs;
  fill_generators(p);
  if (p.empty) return p;
  p.inequalities = facets_of_homogenization(dim, homogenized_generators(p), homogenized_lineality(p));
  return p;
}

Polyhedron polyhedron_from_generators(std::size_t dim, const std::vector<RatVector>& vertices,
                                      const std::vector<IntVector>& rays,
                                      const std::vector<IntVector>& lineality) {
  Polyhedron p;
  p.dim = dim;
  for (const auto& v : vertices)
    if (v.size() != dim) throw InvalidInput("vertex has wrong dimension");
  for (const auto& r : rays)
    if (r.size() != dim) throw InvalidInput("ray has wrong dimension");
  p.vertices = vertices;
  for (const auto& r : rays)
    if (!is_zero(r)) p.rays.push_back(r);
  for (const auto& l : lineality)
    if (!is_zero(l)) p.lineality.push_back(l);
  if (vertices.empty()) {
    p.empty = true;
    p.rays.clear();
    p.lineality.clear();
    return p;
  }
  p.inequalities = facets_of_homogenization(dim, homogenized_generators(p), homogenized_lineality(p));
  fill_generators(p);
  return p;
}

Polyhedron dual_description(const Polyhedron& input) {
  if (!input.vertices.empty() || !input.rays.empty() || !input.lineality.empty())
    return polyhedron_from_generators(input.dim, input.vertices, input.rays, input.lineality);
  return polyhedron_from_inequalities(input.dim, input.inequalities);
}

bool ConeRep::contains(const IntVector& x) const {
  for (const auto& c : facet_normals)
    if (sgn(dot(c, x)) < 0) return false;
  for (const auto& e : equations)
    if (sgn(dot(e, x))) return false;
  return true;
}

ConeRep cone_irreducible_rep(const std::vector<IntVector>& generators) {
  if (generators.empty()) throw InvalidInput("cone needs at least one generator");
  const std::size_t dim = generators[0].size();
  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (g.size() != dim) throw InvalidInput("generators have different dimensions");
    if (!is_zero(g)) gens.push_back(g);
  }
  if (gens.empty()) throw InvalidInput("cone spanned by zero vectors");
  ConeRep c;
  c.dim = dim;
  RayRep dual = extreme_rays(dim, gens);
  c.facet_normals = dual.rays;
  c.equations = dual.lineality;
  std::vector<IntVector> hs = c.facet_normals;
  for (auto& v : with_negatives(c.equations)) hs.push_back(std::move(v));
  RayRep prim = extreme_rays(dim, hs);
  c.generators = prim.rays;
  c.lineality = prim.lineality;
  return c;
}

ConeRep cone_from_halfspaces(std::size_t dim, const std::vector<IntVector>& halfspaces) {
  RayRep prim = extreme_rays(dim, halfspaces);
  ConeRep c;
  c.dim = dim;
  std::vector<IntVector> dual_hs = prim.rays;
  for (auto& v : with_negatives(prim.lineality)) dual_hs.push_back(std::move(v));
  if (dual_hs.empty()) {
    // the cone is the origin
    c.equations.clear();
    for (std::size_t i = 0; i < dim; ++i) {
      IntVector e(dim, Integer(0));
      e[i] = 1;
      c.equations.push_back(e);
    }
    return c;
  }
  RayRep dual = extreme_rays(dim, dual_hs);
  c.facet_normals = dual.rays;
  c.equations = dual.lineality;
  c.generators = prim.rays;
  c.lineality = prim.lineality;
  return c;
}

Polyhedron covering_polyhedron(const IntMatrix& a) {
  std::vector<Inequality> q;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    IntVector e(a.rows(), Integer(0));
    e[i] = 1;
    q.push_back({e, 0});
  }
  for (std::size_t j = 0; j < a.cols(); ++j) q.push_back({a.column(j), 1});
  return polyhedron_from_inequalities(a.rows(), q);
}

Polyhedron packing_polytope(const IntMatrix& a) {
  std::vector<Inequality> q;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    IntVector e(a.rows(), Integer(0));
    e[i] = 1;
    q.push_back({e, 0});
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    IntVector v = a.column(j);
    for (auto& x : v) x = -x;
    q.push_back({v, -1});
  }
  return polyhedron_from_inequalities(a.rows(), q);
}

Verdict is_integral(const Polyhedron& p) {
  Verdict v;
  v.holds = true;
  v.basis = p.empty ? "empty polyhedron" : p.vertices.empty() ? "no vertices" : "vertex enumeration";
  for (const auto& x : p.vertices)
    if (!is_integral(x)) {
      v.holds = false;
      Certificate c;
      c.kind = "fractional-vertex";
      Json arr = Json::array();
      for (const auto& e : x) arr.push_back(to_string(e));
      c.data["vertex"] = arr;
      c.text = to_string(x);
      v.certificate = c;
      break;
    }
  return v;
}

std::vector<bool> implicit_equalities(const Polyhedron& p) {
  std::vector<bool> eq(p.inequalities.size(), false);
  if (p.empty) return eq;
  for (std::size_t k = 0; k < p.inequalities.size(); ++k) {
    const auto& q = p.inequalities[k];
    bool all = true;
    for (const auto& v : p.vertices)
      if (dot(v, q.normal) != q.offset) {
        all = false;
        break;
      }
    for (const auto& r : p.rays)
      if (all && sgn(dot(r, q.normal))) all = false;
    for (const auto& l : p.lineality)
      if (all && sgn(dot(l, q.normal))) all = false;
    eq[k] = all;
  }
  return eq;
}

bool membership(const Polyhedron& p, const RatVector& x, Membership mode) {
  if (x.size() != p.dim) throw InvalidInput("membership: dimension mismatch");
  if (p.empty) return false;
  std::vector<bool> eq;
  if (mode == Membership::relative_interior) eq = implicit_equalities(p);
  for (std::size_t k = 0; k < p.inequalities.size(); ++k) {
    const auto& q = p.inequalities[k];
    Rational s = dot(x, q.normal);
    if (s < q.offset) return false;
    if (mode == Membership::relative_interior && !eq[k] && s == q.offset) return false;
  }
  return true;
}

namespace {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("bad integer in JSON");
    return x;
  }
  throw InvalidInput("expected an integer in JSON");
}

IntVector int_vector_from_json(const Json& j) {
  IntVector v;
  for (const auto& e : j) v.push_back(integer_from_json(e));
  return v;
}

}  // namespace

Json to_json(const Polyhedron& p) {
  Json j;
  j["dim"] = p.dim;
  j["empty"] = p.empty;
  Json ineq = Json::array();
  for (const auto& q : p.inequalities) {
    Json row = Json::array();
    for (const auto& x : q.normal) row.push_back(integer_json(x));
    row.push_back(integer_json(q.offset));
    ineq.push_back(row);
  }
  j["inequalities"] = ineq;
  Json verts = Json::array();
  for (const auto& v : p.vertices) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    verts.push_back(row);
  }
  j["vertices"] = verts;
  auto ivs = [](const std::vector<IntVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(integer_json(x));
      a.push_back(row);
    }
    return a;
  };
  j["rays"] = ivs(p.rays);
  j["lineality"] = ivs(p.lineality);
  return j;
}

Polyhedron polyhedron_from_json(const Json& j) {
  Polyhedron p;
  if (!j.contains("dim")) throw InvalidInput("polyhedron JSON needs 'dim'");
  p.dim = j.at("dim").get<std::size_t>();
  if (j.contains("inequalities"))
    for (const auto& row : j.at("inequalities")) {
      IntVector v = int_vector_from_json(row);
      if (v.size() != p.dim + 1) throw InvalidInput("inequality row has wrong length");
      Inequality q;
      q.offset = v.back();
      v.pop_back();
      q.normal = std::move(v);
      p.inequalities.push_back(std::move(q));
    }
  if (j.contains("vertices"))
    for (const auto& row : j.at("vertices")) {
      RatVector v;
      for (const auto& e : row) v.push_back(e.is_string() ? parse_rational(e.get<std::string>()) : Rational(integer_from_json(e)));
      p.vertices.push_back(std::move(v));
    }
  if (j.contains("rays"))
    for (const auto& row : j.at("rays")) p.rays.push_back(int_vector_from_json(row));
  if (j.contains("lineality"))
    for (const auto& row : j.at("lineality")) p.lineality.push_back(int_vector_from_json(row));
  return dual_description(p);
}

}  // namespace clutter_algebra
