#include "clutter_algebra/rounding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/exact_linalg.hpp"
#include "clutter_algebra/symbolic.hpp"

namespace clutter_algebra {

const Verdict& PropertyReport::at(const std::string& name) const {
  for (const auto& [key, v] : verdicts)
    if (key == name) return v;
  throw InvalidInput("report has no property named " + name);
}

Json PropertyReport::to_json() const {
  Json j = Json::object();
  for (const auto& [key, v] : verdicts) j[key] = clutter_algebra::to_json(v);
  j["cross_checks"] = cross_check_failures;
  j["skipped"] = skipped;
  return j;
}

namespace {

IntVector unit(std::size_t dim, std::size_t i) {
  IntVector e(dim, Integer(0));
  e[i] = 1;
  return e;
}

void require_nonnegative(const IntMatrix& a) {
  if (!a.is_nonnegative()) throw InvalidInput("matrix entries must be nonnegative");
}

Json point_json(const IntVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(x.get_str());
  return arr;
}

Verdict trivially(bool holds, const std::string& basis) {
  Verdict v;
  v.holds = holds;
  v.basis = basis;
  return v;
}

bool columns_form_clutter(const IntMatrix& a) {
  if (!a.is_binary() || a.has_zero_column()) return false;
  auto cols = a.column_list();
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (i == j) continue;
      bool inside = true;
      for (std::size_t k = 0; k < cols[i].size() && inside; ++k)
        if (cols[i][k] > cols[j][k]) inside = false;
      if (inside) return false;
    }
  return true;
}

}  // namespace

Verdict is_normal_ideal(const IntMatrix& a) {
  require_nonnegative(a);
  if (a.cols() == 0) throw InvalidInput("ideal has no generators");
  if (a.has_zero_column()) throw InvalidInput("generators must be nonzero");
  const std::size_t n = a.rows();
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(unit(n + 1, i));
  for (auto v : a.column_list()) {
    v.push_back(1);
    gens.push_back(std::move(v));
  }
  Verdict v = is_hilbert_basis(gens);
  v.basis = "Rees algebra generators {e_i, (v_j,1)} form a Hilbert basis of the Rees cone";
  if (v.certificate) {
    const auto& pt = v.certificate->data["point"];
    IntVector x;
    for (const auto& s : pt) x.emplace_back(s.get<std::string>());
    MonomialGen g{IntVector(x.begin(), x.end() - 1), x.back()};
    Certificate c;
    c.kind = "integral-closure-gap";
    c.data["a"] = point_json(g.a);
    c.data["b"] = g.b.get_str();
    c.text = format_generator(g, default_names(n));
    v.certificate = c;
  }
  return v;
}

Verdict is_normal_ideal(const MonomialIdeal& ideal) {
  if (ideal.generators.empty()) throw InvalidInput("ideal has no generators");
  return is_normal_ideal(IntMatrix::from_columns(ideal.generators, ideal.nvars));
}

Verdict is_normal_ideal(const Clutter& c) {
  if (c.edges.empty()) return trivially(true, "zero ideal");
  if (std::find(c.edges.begin(), c.edges.end(), VertexSet(0)) != c.edges.end())
    return trivially(true, "unit ideal");
  return is_normal_ideal(incidence_matrix(c));
}

const char* system_name(RoundingSystem s) {
  switch (s) {
    case RoundingSystem::ge: return "x >= 0; xA >= 1";
    case RoundingSystem::le: return "x >= 0; xA <= 1";
    case RoundingSystem::eq: return "xA <= 1";
  }
  return "";
}

std::size_t default_falsifier_bound(std::size_t n) {
  if (n <= 5) return 2;
  if (n <= 8) return 1;
  return 0;
}

namespace {

// Exact integer optima by memoized recursion on the residual right-hand side.
class IntegerProgram {
 public:
  IntegerProgram(const IntMatrix& a, RoundingSystem s) : system_(s) {
    for (auto& c : a.column_list()) {
      if (is_zero(c)) continue;
      cols_.push_back(to_small(c));
    }
  }

  // ge: max 1.y with Ay <= w.  le: min 1.y with Ay >= w.  eq: min 1.y with Ay = w.
  std::optional<std::int64_t> solve(const Point& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    std::optional<std::int64_t> out;
    switch (system_) {
      case RoundingSystem::ge: out = solve_ge(w); break;
      case RoundingSystem::le: out = solve_le(w); break;
      case RoundingSystem::eq: out = solve_eq(w); break;
    }
    memo_.emplace(w, out);
    return out;
  }

 private:
  static bool fits(const Point& c, const Point& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (c[i] > w[i]) return false;
    return true;
  }

  std::optional<std::int64_t> solve_ge(const Point& w) {
    std::int64_t best = 0;
    for (const auto& c : cols_)
      if (fits(c, w)) best = std::max(best, 1 + *solve(sub(w, c)));
    return best;
  }

  std::optional<std::int64_t> solve_le(const Point& w) {
    std::size_t i = 0;
    while (i < w.size() && w[i] <= 0) ++i;
    if (i == w.size()) return 0;
    std::optional<std::int64_t> best;
    for (const auto& c : cols_) {
      if (c[i] == 0) continue;
      Point r = sub(w, c);
      for (auto& x : r) x = std::max<std::int64_t>(x, 0);
      auto sub_best = solve(r);
      if (sub_best && (!best || 1 + *sub_best < *best)) best = 1 + *sub_best;
    }
    return best;
  }

  std::optional<std::int64_t> solve_eq(const Point& w) {
    std::size_t i = 0;
    while (i < w.size() && w[i] == 0) ++i;
    if (i == w.size()) return 0;
    std::optional<std::int64_t> best;
    for (const auto& c : cols_) {
      if (c[i] == 0 || !fits(c, w)) continue;
      auto sub_best = solve(sub(w, c));
      if (sub_best && (!best || 1 + *sub_best < *best)) best = 1 + *sub_best;
    }
    return best;
  }

  RoundingSystem system_;
  std::vector<Point> cols_;
  std::map<Point, std::optional<std::int64_t>> memo_;
};

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

std::optional<RoundingCounterexample> rounding_falsifier(const IntMatrix& a, RoundingSystem s, std::size_t bound) {
  require_nonnegative(a);
  const std::size_t n = a.rows();
  if (n == 0 || a.cols() == 0) return std::nullopt;
  // LP optima are extremes of <x, w> over the vertices of the dual feasible region.
  std::vector<RatVector> vertices;
  std::optional<ConeRep> column_cone;
  switch (s) {
    case RoundingSystem::ge:
      if (a.has_zero_column()) return std::nullopt;  // primal unbounded for every w
      vertices = covering_polyhedron(a).vertices;
      break;
    case RoundingSystem::le:
      vertices = packing_polytope(a).vertices;
      break;
    case RoundingSystem::eq: {
      std::vector<Inequality> ineqs;
      std::vector<IntVector> nonzero;
      for (auto& c : a.column_list()) {
        if (is_zero(c)) continue;
        IntVector neg = c;
        for (auto& x : neg) x = -x;
        ineqs.push_back({neg, Integer(-1)});
        nonzero.push_back(c);
      }
      if (nonzero.empty()) return std::nullopt;
      vertices = polyhedron_from_inequalities(n, ineqs).vertices;
      column_cone = cone_irreducible_rep(nonzero);
      break;
    }
  }
  std::vector<bool> zero_row(n, false);
  for (std::size_t i = 0; i < n; ++i) zero_row[i] = is_zero(a.row(i));

  IntegerProgram ip(a, s);
  IntVector w(n, Integer(0));
  for (;;) {
    bool finite = true;
    if (s == RoundingSystem::le)
      for (std::size_t i = 0; i < n; ++i)
        if (zero_row[i] && w[i] > 0) finite = false;
    if (s == RoundingSystem::eq) finite = column_cone->contains(w);
    if (finite) {
      Rational lp = dot(vertices.front(), w);
      for (const auto& x : vertices) {
        Rational val = dot(x, w);
        if (s == RoundingSystem::ge ? val < lp : val > lp) lp = val;
      }
      auto opt = ip.solve(to_small(w));
      bool ok = false;
      if (opt) {
        Integer expected = s == RoundingSystem::ge ? floor_of(lp) : ceil_of(lp);
        ok = Integer(static_cast<long>(*opt)) == expected;
      }
      if (!ok) {
        RoundingCounterexample cx{w, lp, std::nullopt};
        if (opt) cx.ip = Integer(static_cast<long>(*opt));
        return cx;
      }
    }
    std::size_t pos = 0;
    while (pos < n && w[pos] == static_cast<long>(bound)) w[pos++] = 0;
    if (pos == n) break;
    w[pos] += 1;
  }
  return std::nullopt;
}

namespace {

void apply_falsifier(Verdict& v, const IntMatrix& a, RoundingSystem s, const RoundingOptions& opt) {
  const std::size_t bound = opt.falsifier_bound.value_or(default_falsifier_bound(a.rows()));
  if (bound == 0) return;
  auto cx = rounding_falsifier(a, s, bound);
  if (!cx) return;
  if (v.holds)
    throw CrossCheckFailure(std::string("rounding falsifier refutes a positive verdict for ") + system_name(s) +
                            " at w = " + to_string(cx->w));
  if (v.certificate) {
    Json j{{"w", point_json(cx->w)}, {"lp", to_string(cx->lp)}};
    j["ip"] = cx->ip ? Json(cx->ip->get_str()) : Json(nullptr);
    v.certificate->data["rounding_counterexample"] = j;
  }
}

}  // namespace

std::vector<IntVector> lower_vectors(const IntMatrix& a) {
  require_nonnegative(a);
  std::set<IntVector> out;
  for (const auto& col : a.column_list()) {
    IntVector x(col.size(), Integer(0));
    for (;;) {
      out.insert(x);
      if (out.size() > max_cells()) throw CapExceeded("lower vector set exceeds the cell cap");
      std::size_t pos = 0;
      while (pos < x.size() && x[pos] == col[pos]) x[pos++] = 0;
      if (pos == x.size()) break;
      x[pos] += 1;
    }
  }
  return {out.begin(), out.end()};
}

Verdict irp_ge(const IntMatrix& a, const RoundingOptions& opt) {
  Verdict v = is_normal_ideal(a);
  v.basis = "x >= 0; xA >= 1 rounds iff R[It] is normal";
  apply_falsifier(v, a, RoundingSystem::ge, opt);
  return v;
}

Verdict irp_le(const IntMatrix& a, const RoundingOptions& opt) {
  require_nonnegative(a);
  auto lows = lower_vectors(a);
  if (lows.size() > opt.max_generators)
    throw CapExceeded("subring has " + std::to_string(lows.size()) + " generators, cap " +
                      std::to_string(opt.max_generators));
  std::vector<IntVector> gens;
  for (auto w : lows) {
    w.push_back(1);
    gens.push_back(std::move(w));
  }
  Verdict v = is_hilbert_basis(gens);
  v.basis = "x >= 0; xA <= 1 rounds iff K[x^w t : w <= v_i] is normal";
  if (v.certificate) {
    v.certificate->kind = "subring-normality-gap";
    v.certificate->text = "point " + v.certificate->text;
  }
  apply_falsifier(v, a, RoundingSystem::le, opt);
  if (opt.cross_checks && columns_form_clutter(a)) {
    IntMatrix star = dual_star(a);
    if (!star.has_zero_column()) {
      RoundingOptions inner = opt;
      inner.cross_checks = false;
      if (irp_ge(star, inner).holds != v.holds)
        throw CrossCheckFailure("x >= 0; xA <= 1 disagrees with x >= 0; xA* >= 1");
    }
  }
  return v;
}

Verdict irp_eq(const IntMatrix& a, const RoundingOptions& opt) {
  require_nonnegative(a);
  const std::size_t n = a.rows();
  std::vector<IntVector> gens;
  for (auto v : a.column_list()) {
    v.push_back(1);
    gens.push_back(std::move(v));
  }
  IntVector top(n + 1, Integer(0));
  top[n] = 1;
  gens.push_back(top);
  Verdict v = is_hilbert_basis(gens);
  v.basis = "xA <= 1 rounds iff {(v_i,1), (0,1)} is a Hilbert basis";
  if (v.certificate) v.certificate->kind = "ehrhart-gap";
  apply_falsifier(v, a, RoundingSystem::eq, opt);
  if (opt.cross_checks && a.cols() > 0 && !a.has_zero_column()) {
    auto cols = a.column_list();
    std::set<Integer> degrees;
    for (const auto& c : cols) {
      Integer s = 0;
      for (const auto& x : c) s += x;
      degrees.insert(s);
    }
    const bool normal_torsion_free = is_hilbert_basis(cols).holds && lattice_quotient(a).torsion.empty();
    if (v.holds && !normal_torsion_free)
      throw CrossCheckFailure("xA <= 1 rounds but K[F] is not normal or Z^n/ZA has torsion");
    if (degrees.size() == 1 && !v.holds && normal_torsion_free)
      throw CrossCheckFailure("uniform columns: K[F] normal and torsion-free but xA <= 1 does not round");
  }
  return v;
}

Verdict irp(const IntMatrix& a, RoundingSystem s, const RoundingOptions& opt) {
  switch (s) {
    case RoundingSystem::ge: return irp_ge(a, opt);
    case RoundingSystem::le: return irp_le(a, opt);
    case RoundingSystem::eq: return irp_eq(a, opt);
  }
  throw InvalidInput("unknown rounding system");
}

Verdict mfmc(const Clutter& c, const MfmcOptions& opt) {
  if (c.edges.empty()) return trivially(true, "no edges");
  const IntMatrix a = incidence_matrix(c);
  Verdict integral = is_integral(covering_polyhedron(a));
  Verdict normal = is_normal_ideal(a);
  Verdict v;
  v.holds = integral.holds && normal.holds;
  v.basis = "max-flow min-cut iff Q(A) is integral and R[It] is normal";
  if (!integral.holds)
    v.certificate = integral.certificate;
  else if (!normal.holds)
    v.certificate = normal.certificate;

  const std::size_t n = c.size();
  if (n <= opt.weight_check_max_vertices && opt.weight_bound > 0) {
    std::vector<std::size_t> w(n, 0);
    for (;;) {
      const std::size_t a0 = alpha0_parallelization(c, w);
      const std::size_t b1 = beta1_parallelization_bound(c, w, opt.weight_bound);
      if (a0 != b1) {
        if (v.holds) throw CrossCheckFailure("max-flow min-cut holds but beta1(C^w) != alpha0(C^w)");
        if (v.certificate) {
          Json jw = Json::array();
          for (auto x : w) jw.push_back(x);
          v.certificate->data["weight_witness"] = Json{{"w", jw}, {"alpha0", a0}, {"beta1", b1}};
        }
        break;
      }
      std::size_t pos = 0;
      while (pos < n && w[pos] == opt.weight_bound) w[pos++] = 0;
      if (pos == n) break;
      ++w[pos];
    }
  }
  return v;
}

Verdict normally_torsion_free(const Clutter& c, const MfmcOptions& opt) {
  Verdict v = mfmc(c, opt);
  v.basis = "normally torsion free iff max-flow min-cut";
  if (c.edges.empty()) return v;
  for (std::size_t i = 2; i <= 3; ++i) {
    auto sym = symbolic_power(c, i);
    auto ord = ordinary_power(c, i);
    if (sym == ord) continue;
    if (v.holds) throw CrossCheckFailure("max-flow min-cut holds but I^(" + std::to_string(i) + ") != I^" +
                                         std::to_string(i));
    std::set<IntVector> in_ord(ord.generators.begin(), ord.generators.end());
    for (const auto& g : sym.generators)
      if (!in_ord.count(g)) {
        if (!v.certificate) {
          v.certificate = Certificate{};
          v.certificate->kind = "power-gap";
        }
        v.certificate->data["power_gap"] = Json{{"power", i}, {"monomial", format_monomial(g, c.vertices)}};
        break;
      }
    break;
  }
  return v;
}

PropertyReport duality_report(const Clutter& c, const DualityOptions& dopt) {
  if (c.edges.empty()) throw InvalidInput("clutter has no edges");
  for (auto e : c.edges) {
    if (e == 0) throw InvalidInput("empty edge");
    if (e == c.vertex_set()) throw InvalidInput("an edge equals the vertex set, so A* has a zero column");
  }
  const std::size_t n = c.size();
  const IntMatrix a = incidence_matrix(c);
  const IntMatrix star = dual_star(a);
  RoundingOptions opt;
  opt.cross_checks = false;

  PropertyReport r;
  r.verdicts.emplace_back("a_dual_ideal_normal", is_normal_ideal(star));
  r.verdicts.back().second.basis = "R[I*t] is normal";

  auto lows = lower_vectors(a);
  const bool subring_small = lows.size() <= dopt.max_subring_generators;
  if (subring_small) {
    std::vector<IntVector> lifted;
    for (auto w : lows) {
      w.push_back(1);
      lifted.push_back(std::move(w));
    }
    r.verdicts.emplace_back("b_subring_normal", is_hilbert_basis(lifted));
    r.verdicts.back().second.basis = "K[x^w t : w <= v_i] is normal";
  } else {
    r.skipped.push_back("b_subring_normal: " + std::to_string(lows.size()) + " subring generators exceed the cap of " +
                        std::to_string(dopt.max_subring_generators));
  }

  std::vector<IntVector> gamma;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n + 1, Integer(0));
    e[i] = -1;
    gamma.push_back(std::move(e));
  }
  for (auto v : a.column_list()) {
    v.push_back(1);
    gamma.push_back(std::move(v));
  }
  r.verdicts.emplace_back("c_gamma_hilbert_basis", is_hilbert_basis(gamma));
  r.verdicts.back().second.basis = "{-e_i, (v_j,1)} is a Hilbert basis";

  r.verdicts.emplace_back("d_irp_ge_dual", irp_ge(star, opt));
  if (subring_small)
    r.verdicts.emplace_back("e_irp_le", irp_le(a, opt));
  else
    r.skipped.push_back("e_irp_le: same subring, over the cap");

  const bool first = r.verdicts.front().second.holds;
  for (const auto& [name, v] : r.verdicts)
    if (v.holds != first) r.cross_check_failures.push_back("a_dual_ideal_normal disagrees with " + name);

  r.verdicts.emplace_back("ideal_normal", irp_ge(a, opt));
  r.verdicts.back().second.basis = "R[It] is normal (x >= 0; xA >= 1 rounds)";
  if (c.uniform() && c.edge_size() == 2 && c.covered() == c.vertex_set() &&
      r.verdicts.back().second.holds != first)
    r.cross_check_failures.push_back("graph: R[It] normal disagrees with R[I*t] normal");

  if (!r.cross_check_failures.empty()) throw CrossCheckFailure(r.cross_check_failures.front());
  return r;
}

PropertyReport uniform_mfmc_consequences(const Clutter& c) {
  PropertyReport r;
  const Verdict m = mfmc(c);
  r.verdicts.emplace_back("mfmc", m);
  const IntMatrix a = incidence_matrix(c);
  const Integer delta = delta_r(a, rank(a));
  r.verdicts.emplace_back("delta_r_is_one", trivially(delta == 1, "Delta_r(A) = " + delta.get_str()));
  r.verdicts.emplace_back("columns_hilbert_basis", is_hilbert_basis(a.column_list()));
  const bool has_pm = perfect_matching(c).has_value();
  const bool uniform = c.uniform();
  if (uniform) {
    const std::size_t d = c.edge_size();
    const std::size_t a0 = alpha0(c);
    const bool formula = c.size() == d * a0;
    r.verdicts.emplace_back("perfect_matching_iff_n_eq_d_alpha0",
                            trivially(has_pm == formula, "perfect matching " + std::string(has_pm ? "exists" : "absent") +
                                                             ", n = " + std::to_string(c.size()) + ", d*alpha0 = " +
                                                             std::to_string(d * a0)));
    if (m.holds)
      for (const auto& [name, v] : r.verdicts)
        if (!v.holds) r.cross_check_failures.push_back("uniform max-flow min-cut clutter fails " + name);
  } else {
    r.verdicts.emplace_back("perfect_matching", trivially(has_pm, "clutter is not uniform; no assertion"));
  }
  if (!r.cross_check_failures.empty()) throw CrossCheckFailure(r.cross_check_failures.front());
  return r;
}

Integer stacked_delta(const Clutter& c) {
  const IntMatrix b = incidence_matrix(c).stacked(IntVector(c.edges.size(), Integer(1)));
  return delta_r(b, rank(b));
}

Verdict is_minimally_non_normal(const Clutter& c, std::size_t max_vertices) {
  const std::size_t n = c.size();
  if (n > max_vertices) throw CapExceeded("minor enumeration capped at " + std::to_string(max_vertices) + " vertices");
  if (is_normal_ideal(c).holds) return trivially(false, "the ideal is normal");
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::set<std::pair<std::size_t, std::vector<VertexSet>>> seen;
  for (std::size_t idx = 1; idx < total; ++idx) {
    VertexSet del = 0, con = 0;
    std::size_t x = idx;
    for (std::size_t i = 0; i < n; ++i, x /= 3) {
      if (x % 3 == 1) del |= bit(i);
      if (x % 3 == 2) con |= bit(i);
    }
    Clutter m = drop_isolated(minor(c, del, con));
    if (m.edges.empty() || m.edges.front() == 0) continue;
    if (!seen.insert({m.size(), m.edges}).second) continue;
    if (!is_normal_ideal(m).holds) {
      Verdict v;
      v.holds = false;
      v.basis = "a proper minor is not normal";
      Certificate cert;
      cert.kind = "non-normal-minor";
      cert.data["deleted"] = format_set(del, c.vertices);
      cert.data["contracted"] = format_set(con, c.vertices);
      cert.text = format_clutter(m);
      v.certificate = cert;
      return v;
    }
  }
  return trivially(true, "not normal, every proper minor normal");
}

NormalityPair parallelization_preserves_normality_test(const Clutter& c, const std::vector<std::size_t>& w) {
  for (auto x : w)
    if (x > 3) throw CapExceeded("parallelization weights are capped at 3");
  NormalityPair out{is_normal_ideal(c), is_normal_ideal(parallelization(c, w))};
  if (out.before.holds && !out.after.holds)
    throw CrossCheckFailure("normality lost under parallelization");
  return out;
}

}  // namespace clutter_algebra
