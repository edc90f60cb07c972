#include "clutter_algebra/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/exact_linalg.hpp"
#include "clutter_algebra/triangulation.hpp"

namespace clutter_algebra {

namespace {

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Nonzero lattice points of the half-open parallelepiped of a simplicial cone.
std::vector<Point> parallelepiped_points(const std::vector<IntVector>& gens) {
  const std::size_t d = gens[0].size(), k = gens.size();
  IntMatrix g = IntMatrix::from_columns(gens, d);
  SnfResult s = snf(g);
  Integer volume = 1;
  for (const auto& x : s.diag) volume *= x;
  std::vector<Point> out;
  if (volume == 1) return out;
  if (volume > max_cells())
    throw CapExceeded("fundamental parallelepiped exceeds the cell cap (CLUTTER_ALGEBRA_MAX_CELLS)");
  const std::int64_t n = to_small(s.diag.back());
  std::vector<std::int64_t> step(k);
  for (std::size_t i = 0; i < k; ++i) step[i] = to_small(s.diag.back() / s.diag[i]);
  std::vector<Point> rcols(k);
  for (std::size_t i = 0; i < k; ++i) rcols[i] = to_small(s.right.column(i));
  std::vector<Point> gp;
  for (const auto& v : gens) gp.push_back(to_small(v));
  std::vector<std::int64_t> j(k, 0), diag(k);
  for (std::size_t i = 0; i < k; ++i) diag[i] = to_small(s.diag[i]);
  for (;;) {
    std::size_t pos = 0;
    while (pos < k && ++j[pos] == diag[pos]) j[pos++] = 0;
    if (pos == k) break;
    // n * lambda = R * (j_i * n / d_i), reduced mod n
    Point lam(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (!j[i]) continue;
      const std::int64_t c = checked_mul(j[i], step[i]);
      for (std::size_t r = 0; r < k; ++r) lam[r] = checked_add(lam[r], checked_mul(c, rcols[i][r]));
    }
    for (auto& x : lam) x = ((x % n) + n) % n;
    Point x(d, 0);
    for (std::size_t r = 0; r < k; ++r)
      if (lam[r])
        for (std::size_t c = 0; c < d; ++c) x[c] = checked_add(x[c], checked_mul(lam[r], gp[r][c]));
    for (auto& c : x) {
      if (c % n) throw CrossCheckFailure("parallelepiped point is not integral");
      c /= n;
    }
    if (!is_zero(x)) out.push_back(std::move(x));
  }
  return out;
}

std::vector<IntVector> sorted_big(const std::vector<Point>& pts) {
  std::vector<IntVector> out;
  for (const auto& p : pts) out.push_back(to_big(p));
  std::sort(out.begin(), out.end());
  return out;
}

Point facet_values(const std::vector<Point>& facets, const Point& x) {
  Point v(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) v[i] = checked_dot(facets[i], x);
  return v;
}

bool dominates(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

}  // namespace

HilbertBasis hilbert_basis(const ConeRep& cone, Execution ex) {
  if (!cone.pointed()) throw InvalidInput("cone has lineality");
  HilbertBasis hb;
  hb.cone = cone;
  if (cone.generators.empty()) return hb;
  std::vector<Point> facets;
  for (const auto& c : cone.facet_normals) facets.push_back(to_small(c));
  Point grading(cone.dim, 0);
  for (const auto& f : facets) grading = add(grading, f);

  std::vector<IntVector> gens = cone.generators;
  std::stable_sort(gens.begin(), gens.end(), [&](const IntVector& a, const IntVector& b) {
    return checked_dot(grading, to_small(a)) < checked_dot(grading, to_small(b));
  });
  for (const auto& g : gens)
    if (checked_dot(grading, to_small(g)) <= 0) throw CrossCheckFailure("grading not positive on the cone");

  Triangulation tri = placing_triangulation(gens);
  std::vector<std::vector<Point>> found(tri.simplices.size());
  auto work = [&](std::size_t s) {
    std::vector<IntVector> sg;
    for (auto i : tri.simplices[s]) sg.push_back(gens[i]);
    found[s] = parallelepiped_points(sg);
  };
  if (ex == Execution::parallel) {
    bool failed = false;
    std::string what;
    bool overflow = false, cap = false;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < tri.simplices.size(); ++s) {
      try {
        work(s);
      } catch (const WordOverflow&) {
#pragma omp critical
        overflow = failed = true;
      } catch (const CapExceeded& e) {
#pragma omp critical
        {
          cap = failed = true;
          what = e.what();
        }
      } catch (const std::exception& e) {
#pragma omp critical
        {
          failed = true;
          what = e.what();
        }
      }
    }
    if (overflow) throw WordOverflow();
    if (cap) throw CapExceeded(what);
    if (failed) throw CrossCheckFailure(what);
  } else {
    for (std::size_t s = 0; s < tri.simplices.size(); ++s) work(s);
  }

  std::unordered_set<Point, PointHash> seen;
  std::vector<Point> cand;
  for (const auto& g : gens) {
    Point p = to_small(g);
    if (seen.insert(p).second) cand.push_back(std::move(p));
  }
  for (auto& list : found)
    for (auto& p : list)
      if (seen.insert(p).second) cand.push_back(std::move(p));

  struct Entry {
    std::int64_t degree;
    Point values;
    Point x;
  };
  std::vector<Entry> entries;
  entries.reserve(cand.size());
  for (auto& x : cand) entries.push_back({checked_dot(grading, x), facet_values(facets, x), std::move(x)});
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.x < b.x;
  });
  std::vector<const Entry*> basis;
  for (const auto& e : entries) {
    bool reducible = false;
    for (const Entry* h : basis)
      if (h->degree < e.degree && dominates(e.values, h->values)) {
        reducible = true;
        break;
      }
    if (!reducible) basis.push_back(&e);
  }
  std::vector<Point> pts;
  for (const Entry* h : basis) pts.push_back(h->x);
  hb.elements = sorted_big(pts);
  return hb;
}

HilbertBasis hilbert_basis_of(const std::vector<IntVector>& generators, Execution ex) {
  return hilbert_basis(cone_irreducible_rep(generators), ex);
}

Verdict is_hilbert_basis(const std::vector<IntVector>& vectors) {
  for (const auto& v : vectors)
    if (is_zero(v)) throw InvalidInput("is_hilbert_basis: zero vector");
  HilbertBasis hb = hilbert_basis_of(vectors);
  std::set<IntVector> given(vectors.begin(), vectors.end());
  Verdict v;
  v.holds = true;
  v.basis = "minimal Hilbert basis contained in the given set";
  for (const auto& h : hb.elements)
    if (!given.count(h)) {
      v.holds = false;
      Certificate c;
      c.kind = "unreachable-point";
      Json arr = Json::array();
      for (const auto& x : h) arr.push_back(x.get_str());
      c.data["point"] = arr;
      c.text = to_string(h);
      v.certificate = c;
      break;
    }
  return v;
}

std::optional<ComboWitness> semigroup_member(const std::vector<IntVector>& generators,
                                             const IntVector& target) {
  if (generators.empty()) {
    if (is_zero(target)) return ComboWitness{};
    return std::nullopt;
  }
  const std::size_t d = generators[0].size();
  if (target.size() != d) throw InvalidInput("semigroup_member: dimension mismatch");
  ConeRep cone = cone_irreducible_rep(generators);
  if (!cone.pointed()) throw InvalidInput("semigroup_member: cone has lineality");
  ComboWitness w;
  w.coefficients.assign(generators.size(), Integer(0));
  if (!cone.contains(target)) return std::nullopt;
  if (is_zero(target)) return w;

  std::vector<Point> facets, equations;
  for (const auto& c : cone.facet_normals) facets.push_back(to_small(c));
  std::vector<std::size_t> order;
  std::vector<Point> gens;
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!is_zero(generators[i])) order.push_back(i);
  auto total = [&](std::size_t i) {
    Integer s = 0;
    for (const auto& x : generators[i]) s += x;
    return s;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return total(a) > total(b); });
  for (auto i : order) gens.push_back(to_small(generators[i]));
  std::vector<Point> gvals;
  for (const auto& g : gens) gvals.push_back(facet_values(facets, g));
  auto in_cone = [&](const Point& vals) {
    for (auto v : vals)
      if (v < 0) return false;
    return true;
  };
  // Points on the cone's boundary are detected through the facet values;
  // equations hold automatically for combinations of generators in the span.
  std::set<std::pair<std::size_t, Point>> dead;
  std::vector<std::int64_t> coeff(gens.size(), 0);
  Point start = to_small(target);
  std::function<bool(const Point&, const Point&, std::size_t)> dfs = [&](const Point& rem, const Point& vals,
                                                                         std::size_t i) -> bool {
    if (is_zero(rem)) return true;
    if (i == gens.size()) return false;
    if (dead.count({i, rem})) return false;
    std::vector<std::pair<Point, Point>> stack{{rem, vals}};
    for (;;) {
      Point r = sub(stack.back().first, gens[i]);
      Point v = sub(stack.back().second, gvals[i]);
      if (!in_cone(v)) break;
      stack.emplace_back(std::move(r), std::move(v));
    }
    for (std::size_t c = stack.size(); c-- > 0;) {
      coeff[i] = static_cast<std::int64_t>(c);
      if (dfs(stack[c].first, stack[c].second, i + 1)) return true;
    }
    coeff[i] = 0;
    dead.insert({i, rem});
    if (dead.size() > max_cells()) throw CapExceeded("semigroup search exceeded the cell cap");
    return false;
  };
  // the equations of the span must vanish for the target to be reachable
  if (!dfs(start, facet_values(facets, start), 0)) return std::nullopt;
  for (std::size_t k = 0; k < order.size(); ++k) w.coefficients[order[k]] = Integer(static_cast<long>(coeff[k]));
  IntVector check(d, Integer(0));
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t c = 0; c < d; ++c) check[c] += w.coefficients[i] * generators[i][c];
  if (check != target) throw CrossCheckFailure("semigroup witness does not reproduce the target");
  return w;
}

namespace {

// Integer box enclosing k*P.
std::pair<Point, Point> bounding_box(const Polyhedron& p, const Integer& k) {
  Point lo(p.dim), hi(p.dim);
  for (std::size_t i = 0; i < p.dim; ++i) {
    Rational mn = p.vertices[0][i], mx = p.vertices[0][i];
    for (const auto& v : p.vertices) mn = std::min(mn, v[i]), mx = std::max(mx, v[i]);
    mn *= k, mx *= k;
    Integer f, c;
    mpz_fdiv_q(f.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[i] = to_small(f), hi[i] = to_small(c);
  }
  return {lo, hi};
}

std::vector<Point> box_scan(const std::vector<Point>& normals, const Point& offsets, const Point& lo,
                            const Point& hi) {
  const std::size_t n = lo.size();
  Integer cells = 1;
  for (std::size_t i = 0; i < n; ++i) cells *= Integer(static_cast<long>(hi[i] - lo[i] + 1));
  if (cells > max_cells()) throw CapExceeded("lattice point box exceeds the cell cap (CLUTTER_ALGEBRA_MAX_CELLS)");
  std::vector<Point> out;
  if (n == 0) return out;
  Point x = lo;
  for (;;) {
    bool ok = true;
    for (std::size_t k = 0; k < normals.size() && ok; ++k)
      if (checked_dot(normals[k], x) < offsets[k]) ok = false;
    if (ok) out.push_back(x);
    std::size_t pos = n;
    while (pos-- > 0) {
      if (x[pos] < hi[pos]) {
        ++x[pos];
        break;
      }
      x[pos] = lo[pos];
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

void system_of(const Polyhedron& p, const Integer& k, std::vector<Point>& normals, Point& offsets) {
  for (const auto& q : p.inequalities) {
    normals.push_back(to_small(q.normal));
    offsets.push_back(to_small(q.offset * k));
  }
}

}  // namespace

std::vector<IntVector> lattice_points(const Polyhedron& p, const Integer& k) {
  if (sgn(k) < 0) throw InvalidInput("lattice_points: negative dilation");
  if (p.empty) return {};
  if (!p.bounded()) throw InvalidInput("lattice_points: polyhedron is unbounded");
  if (p.dim == 0) return {IntVector{}};
  auto [lo, hi] = bounding_box(p, k);
  std::vector<Point> normals;
  Point offsets;
  system_of(p, k, normals, offsets);
  return sorted_big(box_scan(normals, offsets, lo, hi));
}

Verdict idp_check(const Polyhedron& p, std::size_t k_max) {
  Verdict v;
  v.holds = true;
  v.basis = "bounded integer-decomposition search up to k = " + std::to_string(k_max);
  if (p.empty || k_max < 2) return v;
  std::vector<Point> normals;
  Point offsets;
  system_of(p, 1, normals, offsets);
  auto in_kp = [&](const Point& x, std::int64_t k) {
    for (std::size_t i = 0; i < normals.size(); ++i)
      if (checked_dot(normals[i], x) < checked_mul(offsets[i], k)) return false;
    return true;
  };
  auto [lo1, hi1] = bounding_box(p, 1);
  auto [lo_all, hi_all] = bounding_box(p, Integer(static_cast<long>(k_max)));
  // integer points of P that can appear as a summand
  Point p_hi = hi_all;
  for (std::size_t i = 0; i < p.dim; ++i) p_hi[i] = checked_add(hi_all[i], -checked_mul(lo1[i], static_cast<std::int64_t>(k_max - 1)));
  std::vector<Point> summands = box_scan(normals, offsets, lo1, p_hi);

  std::set<std::pair<std::int64_t, Point>> dead;
  std::function<bool(const Point&, std::int64_t)> splits = [&](const Point& a, std::int64_t k) -> bool {
    if (k == 1) return in_kp(a, 1);
    if (dead.count({k, a})) return false;
    for (const auto& s : summands) {
      bool fits = true;
      for (std::size_t i = 0; i < a.size() && fits; ++i)
        if (s[i] > a[i] - (k - 1) * lo1[i]) fits = false;
      if (!fits) continue;
      Point rest = sub(a, s);
      if (in_kp(rest, k - 1) && splits(rest, k - 1)) return true;
    }
    dead.insert({k, a});
    return false;
  };
  for (std::size_t k = 2; k <= k_max; ++k) {
    auto [lo, hi] = bounding_box(p, Integer(static_cast<long>(k)));
    std::vector<Point> normals_k;
    Point offsets_k;
    system_of(p, Integer(static_cast<long>(k)), normals_k, offsets_k);
    auto pts = box_scan(normals_k, offsets_k, lo, hi);
    std::stable_sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
      return std::accumulate(a.begin(), a.end(), std::int64_t(0)) < std::accumulate(b.begin(), b.end(), std::int64_t(0));
    });
    for (const auto& a : pts)
      if (!splits(a, static_cast<std::int64_t>(k))) {
        v.holds = false;
        Certificate c;
        c.kind = "indecomposable-point";
        c.data["k"] = k;
        Json arr = Json::array();
        for (auto x : a) arr.push_back(x);
        c.data["point"] = arr;
        c.text = std::to_string(k) + " : " + to_string(a);
        v.certificate = c;
        return v;
      }
  }
  return v;
}

std::vector<IntVector> minimal_semigroup_elements(const ConeRep& cone, const std::vector<bool>& strict,
                                                  const IntVector& degree, const Integer& b_max) {
  if (strict.size() != cone.facet_normals.size())
    throw InvalidInput("minimal_semigroup_elements: one strictness flag per facet");
  if (degree.size() != cone.dim) throw InvalidInput("minimal_semigroup_elements: degree has wrong length");
  for (const auto& g : cone.generators)
    if (sgn(dot(degree, g)) <= 0) throw InvalidInput("degree is not positive on the cone");
  if (!cone.pointed()) throw InvalidInput("cone has lineality");
  std::vector<Inequality> sys;
  for (std::size_t i = 0; i < cone.facet_normals.size(); ++i)
    sys.push_back({cone.facet_normals[i], strict[i] ? 1 : 0});
  for (const auto& e : cone.equations) {
    sys.push_back({e, 0});
    IntVector ne = e;
    for (auto& x : ne) x = -x;
    sys.push_back({ne, 0});
  }
  IntVector nd = degree;
  for (auto& x : nd) x = -x;
  sys.push_back({nd, -b_max});
  Polyhedron box = polyhedron_from_inequalities(cone.dim, sys);
  auto pts = lattice_points(box);
  std::vector<Point> facets;
  for (const auto& c : cone.facet_normals) facets.push_back(to_small(c));
  Point deg = to_small(degree);
  std::vector<std::pair<std::int64_t, Point>> sorted;
  for (const auto& x : pts) sorted.emplace_back(checked_dot(deg, to_small(x)), to_small(x));
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<Point, Point>> minimal;  // (x, facet values)
  std::vector<IntVector> out;
  for (const auto& [dg, x] : sorted) {
    Point vals = facet_values(facets, x);
    bool reducible = false;
    for (const auto& [y, yv] : minimal)
      if (y != x && dominates(vals, yv)) {
        reducible = true;
        break;
      }
    if (!reducible) {
      minimal.emplace_back(x, vals);
      out.push_back(to_big(x));
    }
  }
  return out;
}

}  // namespace clutter_algebra
