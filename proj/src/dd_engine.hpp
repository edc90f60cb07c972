#pragma once

// Double description over a pluggable integer arithmetic.  The machine-word
// instantiation throws WordOverflow; callers then rerun with GMP.

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/integer.hpp"

namespace clutter_algebra::detail {

struct WordArith {
  using T = std::int64_t;
  static T from(const Integer& x) { return to_small(x); }
  static Integer big(T x) { return Integer(static_cast<long>(x)); }
  static T mul(T a, T b) { return checked_mul(a, b); }
  static T add(T a, T b) { return checked_add(a, b); }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw WordOverflow();
    return r;
  }
  static T neg(T a) { return sub(0, a); }
  static int sign(T a) { return (a > 0) - (a < 0); }
  static T gcd(T a, T b) {
    if (a == std::numeric_limits<T>::min() || b == std::numeric_limits<T>::min()) throw WordOverflow();
    return std::gcd(a, b);
  }
  static T div(T a, T g) { return a / g; }
};

struct BigArith {
  using T = Integer;
  static T from(const Integer& x) { return x; }
  static Integer big(const T& x) { return x; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T neg(const T& a) { return -a; }
  static int sign(const T& a) { return sgn(a); }
  static T gcd(const T& a, const T& b) {
    T g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static T div(const T& a, const T& g) {
    T r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return r;
  }
};

template <class A>
struct DoubleDescription {
  using T = typename A::T;
  using Vec = std::vector<T>;
  using Bits = boost::dynamic_bitset<>;

  std::size_t dim;
  std::vector<Vec> hs;
  std::vector<Vec> lineality;
  std::vector<Vec> rays;
  std::vector<Bits> tight;

  static T dot(const Vec& a, const Vec& b) {
    T s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (A::sign(a[k]) && A::sign(b[k])) s = A::add(s, A::mul(a[k], b[k]));
    return s;
  }

  static void normalize(Vec& v) {
    T g = 0;
    for (const auto& x : v) g = A::gcd(g, x);
    if (A::sign(g) == 0 || g == 1) return;
    for (auto& x : v) x = A::div(x, g);
  }

  // a*x - b*y
  static Vec combine(const T& a, const Vec& x, const T& b, const Vec& y) {
    Vec r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = A::sub(A::mul(a, x[k]), A::mul(b, y[k]));
    normalize(r);
    return r;
  }

  void run() {
    const std::size_t m = hs.size();
    lineality.clear();
    for (std::size_t i = 0; i < dim; ++i) {
      Vec e(dim, T(0));
      e[i] = 1;
      lineality.push_back(e);
    }
    rays.clear();
    tight.clear();
    Bits processed(m);
    std::vector<char> done(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      bool zero = true;
      for (const auto& x : hs[j])
        if (A::sign(x)) zero = false;
      if (zero) done[j] = 1;
    }
    std::vector<T> val;
    for (;;) {
      // lineality-cutting halfspaces first, then fewest rays cut
      std::size_t best = m, best_cut = std::numeric_limits<std::size_t>::max();
      for (std::size_t j = 0; j < m && best_cut > 0; ++j) {
        if (done[j]) continue;
        std::size_t cut = 0;
        bool hits = false;
        for (const auto& l : lineality)
          if (A::sign(dot(hs[j], l))) {
            hits = true;
            break;
          }
        if (!hits) {
          cut = 1;
          for (const auto& r : rays)
            if (A::sign(dot(hs[j], r)) < 0) ++cut;
        }
        if (cut < best_cut) best = j, best_cut = cut;
      }
      if (best == m) break;
      done[best] = 1;
      const Vec& h = hs[best];

      std::size_t li = lineality.size();
      for (std::size_t i = 0; i < lineality.size(); ++i)
        if (A::sign(dot(h, lineality[i]))) {
          li = i;
          break;
        }
      if (li < lineality.size()) {
        Vec l0 = lineality[li];
        T a0 = dot(h, l0);
        if (A::sign(a0) < 0) {
          for (auto& x : l0) x = A::neg(x);
          a0 = A::neg(a0);
        }
        std::vector<Vec> next;
        for (std::size_t i = 0; i < lineality.size(); ++i) {
          if (i == li) continue;
          T a = dot(h, lineality[i]);
          next.push_back(A::sign(a) ? combine(a0, lineality[i], a, l0) : lineality[i]);
        }
        lineality = std::move(next);
        for (std::size_t r = 0; r < rays.size(); ++r) {
          T a = dot(h, rays[r]);
          if (A::sign(a)) rays[r] = combine(a0, rays[r], a, l0);
          tight[r].set(best);
        }
        normalize(l0);
        rays.push_back(l0);
        tight.push_back(processed);
        processed.set(best);
        continue;
      }

      val.resize(rays.size());
      std::vector<std::size_t> plus, zero, minus;
      for (std::size_t r = 0; r < rays.size(); ++r) {
        val[r] = dot(h, rays[r]);
        int s = A::sign(val[r]);
        (s > 0 ? plus : s < 0 ? minus : zero).push_back(r);
      }
      for (auto r : zero) tight[r].set(best);
      processed.set(best);
      if (minus.empty()) continue;

      const std::size_t k = dim - lineality.size();
      std::vector<Vec> next_rays;
      std::vector<Bits> next_tight;
      for (auto r : plus) next_rays.push_back(rays[r]), next_tight.push_back(tight[r]);
      for (auto r : zero) next_rays.push_back(rays[r]), next_tight.push_back(tight[r]);
      Bits common(m);
      for (auto p : plus)
        for (auto n : minus) {
          common = tight[p] & tight[n];
          if (common.count() + 2 < k) continue;
          bool adjacent = true;
          for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
            if (r != p && r != n && common.is_subset_of(tight[r])) adjacent = false;
          if (!adjacent) continue;
          // val[p] > 0 > val[n]
          next_rays.push_back(combine(val[p], rays[n], val[n], rays[p]));
          common.set(best);
          next_tight.push_back(common);
          if (next_rays.size() > max_cells())
            throw CapExceeded("double description exceeded the cell cap (CLUTTER_ALGEBRA_MAX_CELLS)");
        }
      rays = std::move(next_rays);
      tight = std::move(next_tight);
    }
  }
};

}  // namespace clutter_algebra::detail
