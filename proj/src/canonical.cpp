#include "clutter_algebra/canonical.hpp"

#include <algorithm>
#include <set>

#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/exact_linalg.hpp"
#include "clutter_algebra/graph.hpp"
#include "clutter_algebra/rounding.hpp"

namespace clutter_algebra {

namespace {

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool leq(const RatVector& x, const RatVector& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

Integer denominator_lcm(const RatVector& v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  return den;
}

void require_shape(const IntMatrix& a) {
  if (!a.is_nonnegative()) throw InvalidInput("matrix entries must be nonnegative");
  if (a.rows() == 0 || a.cols() == 0) throw InvalidInput("matrix is empty");
  if (a.has_zero_row() || a.has_zero_column()) throw InvalidInput("matrix has a zero row or column");
}

void require_rounding(const IntMatrix& a) {
  require_shape(a);
  if (!irp_le(a).holds) throw InvalidInput("system lacks rounding property");
}

// Cone R_+{(w,1) : w <= v_i}; full-dimensional since A has no zero rows.
ConeRep subring_cone(const IntMatrix& a) {
  std::vector<IntVector> gens;
  for (auto w : lower_vectors(a)) {
    w.push_back(1);
    gens.push_back(std::move(w));
  }
  return cone_irreducible_rep(gens);
}

IntVector t_degree(std::size_t n) {
  IntVector deg(n + 1, Integer(0));
  deg[n] = 1;
  return deg;
}

std::vector<IntVector> interior_minimal(const ConeRep& cone, const IntVector& degree, const Integer& bound) {
  return minimal_semigroup_elements(cone, std::vector<bool>(cone.facet_normals.size(), true), degree, bound);
}

// Lattice points with every facet value >= 1 and degree <= bound.
std::vector<IntVector> interior_points(const ConeRep& cone, const IntVector& degree, const Integer& bound) {
  std::vector<Inequality> sys;
  for (const auto& c : cone.facet_normals) sys.push_back({c, Integer(1)});
  IntVector nd = degree;
  for (auto& x : nd) x = -x;
  sys.push_back({nd, -bound});
  return lattice_points(polyhedron_from_inequalities(cone.dim, sys));
}

IntMatrix system_matrix(const std::vector<IntVector>& lifted, std::size_t n) {
  std::vector<IntVector> cols = lifted;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n + 1, Integer(0));
    e[j] = 1;
    cols.push_back(std::move(e));
  }
  return IntMatrix::from_columns(cols, n + 1);
}

bool satisfies(const IntMatrix& system, const IntVector& x) {
  for (std::size_t j = 0; j < system.cols(); ++j)
    if (dot(system.column(j), x) < 1) return false;
  return true;
}

std::vector<MonomialGen> as_generators(const std::vector<IntVector>& pts, std::size_t n) {
  std::vector<MonomialGen> out;
  for (const auto& x : pts) out.push_back({IntVector(x.begin(), x.begin() + static_cast<long>(n)), x[n]});
  std::sort(out.begin(), out.end());
  return out;
}

// Closed-form a-invariant, compared with the least degree of an interior point.
Integer checked_a_invariant(const std::vector<MaximalVertexDatum>& mv, const ConeRep& cone, std::size_t n) {
  Integer b0 = 0;
  for (const auto& m : mv) b0 = std::max(b0, ceil_of(Rational(1) / Rational(m.d) + m.norm));
  auto pts = interior_minimal(cone, t_degree(n), b0);
  if (pts.empty() || pts.front()[n] != b0)
    throw CrossCheckFailure("closed-form a-invariant disagrees with the least interior degree");
  return -b0;
}

std::vector<IntVector> lifted_vertices(const std::vector<MaximalVertexDatum>& mv) {
  std::vector<IntVector> out;
  for (const auto& m : mv) {
    IntVector col;
    for (const auto& x : m.ell) {
      Rational y = -x * Rational(m.d);
      col.push_back(y.get_num());
    }
    col.push_back(m.d);
    out.push_back(std::move(col));
  }
  return out;
}

Json gens_json(const std::vector<MonomialGen>& gens) {
  Json arr = Json::array();
  for (const auto& g : gens) arr.push_back(to_json(g));
  return arr;
}

std::string gens_text(const std::vector<MonomialGen>& gens, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& g : gens) out += format_generator(g, names) + "\n";
  return out;
}

}  // namespace

std::vector<MaximalVertexDatum> maximal_vertices(const IntMatrix& a) {
  require_shape(a);
  const auto verts = packing_polytope(a).vertices;
  std::vector<MaximalVertexDatum> out;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < verts.size() && maximal; ++j)
      if (j != i && leq(verts[i], verts[j])) maximal = false;
    if (!maximal) continue;
    const auto& ell = verts[i];
    const Integer den = denominator_lcm(ell);
    Integer g = den;
    for (const auto& x : ell) {
      Integer z = x.get_num() * (den / x.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    }
    MaximalVertexDatum m{ell, den / g, 0};
    for (const auto& x : ell) m.norm += x;
    IntVector check;
    for (const auto& x : ell) check.push_back(Rational(x * Rational(m.d)).get_num());
    check.push_back(m.d);
    if (gcd_of(check) != 1) throw CrossCheckFailure("(-d l, d) is not primitive");
    out.push_back(std::move(m));
  }
  return out;
}

Integer a_invariant_S(const IntMatrix& a) {
  require_rounding(a);
  return checked_a_invariant(maximal_vertices(a), subring_cone(a), a.rows());
}

CanonicalModule canonical_module_gens(const IntMatrix& a, const Integer& b_max) {
  require_rounding(a);
  const std::size_t n = a.rows();
  const auto mv = maximal_vertices(a);
  const ConeRep cone = subring_cone(a);
  CanonicalModule out;
  out.a_invariant = checked_a_invariant(mv, cone, n);
  out.halfspace_system = system_matrix(lifted_vertices(mv), n);
  out.degree_bound = b_max;
  auto pts = interior_minimal(cone, t_degree(n), b_max);
  for (const auto& x : pts)
    if (!satisfies(out.halfspace_system, x)) throw CrossCheckFailure("canonical generator violates the system");
  // The system's lattice points must be interior points of the cone.
  std::vector<Inequality> sys;
  for (std::size_t j = 0; j < out.halfspace_system.cols(); ++j) sys.push_back({out.halfspace_system.column(j), 1});
  IntVector nd(n + 1, Integer(0));
  nd[n] = -1;
  sys.push_back({nd, -b_max});
  for (const auto& x : lattice_points(polyhedron_from_inequalities(n + 1, sys)))
    for (const auto& c : cone.facet_normals)
      if (dot(c, x) < 1) throw CrossCheckFailure("system admits a point outside the interior of the cone");
  out.generators = as_generators(pts, n);
  return out;
}

Verdict is_gorenstein_S(const IntMatrix& a) {
  require_rounding(a);
  const std::size_t n = a.rows();
  const auto mv = maximal_vertices(a);
  const ConeRep cone = subring_cone(a);
  const Integer ainv = checked_a_invariant(mv, cone, n);
  const Integer b0 = -ainv;
  Verdict v;
  if (is_integral(packing_polytope(a)).holds) {
    v.holds = true;
    v.basis = "rung 1: P is integral; Gorenstein iff a(S) = -(|l_i| + 1) for every maximal vertex";
    for (const auto& m : mv)
      if (Rational(ainv) != -(m.norm + 1)) {
        v.holds = false;
        Certificate c;
        c.kind = "maximal-vertex";
        c.data["ell"] = to_string(m.ell);
        c.data["a_invariant"] = ainv.get_str();
        c.text = to_string(m.ell);
        v.certificate = c;
        break;
      }
  } else if (std::all_of(mv.begin(), mv.end(),
                         [&](const MaximalVertexDatum& m) { return Rational(b0) == Rational(1) / Rational(m.d) + m.norm; })) {
    v.holds = true;
    v.basis = "rung 2: -a(S) = 1/d_i + |l_i| for every maximal vertex";
  } else {
    const Integer bound = b0 + static_cast<long>(n) + 1;
    const auto gens = interior_minimal(cone, t_degree(n), bound);
    v.holds = gens.size() == 1;
    if (v.holds) {
      const IntVector& g = gens.front();
      for (const auto& x : interior_points(cone, t_degree(n), bound)) {
        IntVector diff(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - g[i];
        if (!cone.contains(diff)) v.holds = false;
      }
    }
    v.basis = "rung 3: canonical module " + std::string(v.holds ? "principal" : "not principal") +
              " up to degree " + bound.get_str();
    if (!v.holds) {
      auto mg = as_generators(gens, n);
      Certificate c;
      c.kind = "canonical-generators";
      c.data["generators"] = gens_json(mg);
      c.data["degree_bound"] = bound.get_str();
      c.text = gens_text(mg, default_names(n));
      v.certificate = c;
    }
  }
  if (v.holds) {
    Rational c0 = 0;
    for (const auto& m : mv) c0 = std::max(c0, m.norm);
    if (c0.get_den() == 1)
      for (const auto& m : mv)
        if (is_integral(m.ell) && m.norm != c0)
          throw CrossCheckFailure("Gorenstein subring with an integral maximal vertex of norm below c0");
  }
  return v;
}

IntMatrix extended_rees_system(const Clutter& g) {
  require_graph(g);
  const std::size_t n = g.size();
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    cols.push_back(std::move(e));
  }
  for (auto c : incidence_matrix(g).column_list()) cols.push_back(std::move(c));
  return IntMatrix::from_columns(cols, n);
}

GeneralCanonical canonical_module_general(const std::vector<IntVector>& gens, const RatVector& grading,
                                          const std::optional<Rational>& degree_bound) {
  if (gens.empty()) throw InvalidInput("no generators");
  const std::size_t n = gens.front().size();
  if (grading.size() != n) throw InvalidInput("grading has the wrong length");
  for (const auto& v : gens) {
    if (v.size() != n) throw InvalidInput("generators have different lengths");
    if (dot(grading, v) != 1) throw InvalidInput("grading must take the value 1 on every generator");
  }
  Verdict normal = is_hilbert_basis(gens);
  if (!normal.holds) throw InvalidInput("generators are not normal; unreachable point " + normal.certificate->text);
  const ConeRep cone = cone_irreducible_rep(gens);
  GeneralCanonical out;
  out.degree_bound = degree_bound.value_or(
      Rational(static_cast<long>(std::max(rank(gens) + 1, cone.generators.size()))));
  const Integer den = denominator_lcm(grading);
  IntVector deg;
  for (const auto& x : grading) deg.push_back(x.get_num() * (den / x.get_den()));
  auto pts = interior_minimal(cone, deg, floor_of(out.degree_bound * Rational(den)));
  if (pts.empty()) throw CrossCheckFailure("no interior lattice point below the degree bound");
  out.generators = pts;
  out.a_invariant = -dot(grading, pts.front());
  return out;
}

CanonicalModule perfect_graph_canonical(const Clutter& g) {
  require_graph(g);
  if (!is_perfect(g).holds) throw InvalidInput("graph is not perfect");
  const std::size_t n = g.size();
  std::vector<IntVector> lifted;
  std::size_t alpha = 0;
  for (auto s : maximal_cliques(complement_graph(g))) {
    IntVector col(n + 1, Integer(0));
    for (auto v : members(s)) col[v] = -1;
    col[n] = 1;
    lifted.push_back(std::move(col));
    alpha = std::max(alpha, popcount(s));
  }
  CanonicalModule out;
  out.halfspace_system = system_matrix(lifted, n);
  out.a_invariant = -static_cast<long>(alpha + 1);
  const IntMatrix cliques = incidence_matrix(clique_clutter(g));
  if (a_invariant_S(cliques) != out.a_invariant)
    throw CrossCheckFailure("perfect graph a-invariant disagrees with the maximal vertex formula");

  const ConeRep cone = subring_cone(cliques);
  out.degree_bound = -out.a_invariant + static_cast<long>(n) + 1;
  auto pts = interior_minimal(cone, t_degree(n), out.degree_bound);
  for (const auto& x : pts)
    if (!satisfies(out.halfspace_system, x)) throw CrossCheckFailure("canonical generator violates the system");
  out.generators = as_generators(pts, n);

  // The lifted independent sets and the unit vectors form a Hilbert basis of the dual cone.
  std::vector<IntVector> gamma = out.halfspace_system.column_list();
  if (!is_hilbert_basis(gamma).holds) throw CrossCheckFailure("dual cone generators are not a Hilbert basis");
  auto rays = cone_irreducible_rep(gamma).generators;
  std::set<IntVector> ray_set(rays.begin(), rays.end());
  std::set<IntVector> facet_set(cone.facet_normals.begin(), cone.facet_normals.end());
  if (ray_set != facet_set) throw CrossCheckFailure("dual cone generators do not span the dual cone");
  return out;
}

Verdict complete_intersection_bipartite(const Clutter& g) {
  require_graph(g);
  if (!is_connected(g)) throw InvalidInput("graph must be connected");
  const bool bip = is_bipartite(g).holds;
  const std::size_t cycles = primitive_cycle_count(g);
  const long expected = static_cast<long>(g.edges.size()) - static_cast<long>(g.size()) + 1;
  Verdict v;
  v.holds = bip && static_cast<long>(cycles) == expected;
  v.basis = "complete intersection iff bipartite with q - n + 1 primitive cycles";
  if (!v.holds) {
    Certificate c;
    c.kind = "cycle-count";
    c.data["bipartite"] = bip;
    c.data["primitive_cycles"] = cycles;
    c.data["q_minus_n_plus_1"] = expected;
    c.text = std::string(bip ? "bipartite" : "not bipartite") + ", primitive cycles " + std::to_string(cycles) +
             ", q - n + 1 = " + std::to_string(expected);
    v.certificate = c;
  }
  return v;
}

}  // namespace clutter_algebra
