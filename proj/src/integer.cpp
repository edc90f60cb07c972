#include "clutter_algebra/integer.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

#include "clutter_algebra/errors.hpp"

namespace clutter_algebra {

std::size_t max_cells() {
  static const std::size_t cap = [] {
    const char* env = std::getenv("CLUTTER_ALGEBRA_MAX_CELLS");
    if (env && *env) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(2'000'000);
  }();
  return cap;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {
template <class V>
std::string join(const V& v, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << sep;
    if constexpr (std::is_same_v<typename V::value_type, std::int64_t>)
      out << v[i];
    else
      out << to_string(v[i]);
  }
  return out.str();
}
}  // namespace

std::string to_string(const IntVector& v, const char* sep) { return join(v, sep); }
std::string to_string(const RatVector& v, const char* sep) { return join(v, sep); }
std::string to_string(const Point& v, const char* sep) { return join(v, sep); }

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw InvalidInput("not a rational number: '" + s + "'");
  r.canonicalize();
  return r;
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch in dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) && sgn(b[i])) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i])) s += a[i] * b[i];
  return s;
}

IntVector primitive_oriented(IntVector v) {
  Integer g = gcd_of(v);
  if (g == 0) throw InvalidInput("zero vector has no primitive form");
  if (g != 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntVector primitive(IntVector v) {
  v = primitive_oriented(std::move(v));
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (sgn(x)) return false;
  return true;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

IntVector numerators(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) throw InvalidInput("vector is not integral");
    out.push_back(x.get_num());
  }
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::int64_t to_small(const Integer& x) {
  if (!x.fits_slong_p()) throw WordOverflow();
  return x.get_si();
}

Point to_small(const IntVector& v) {
  Point out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_small(x));
  return out;
}

IntVector to_big(const Point& v) {
  IntVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw WordOverflow();
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw WordOverflow();
  return r;
}

std::int64_t checked_dot(const Point& a, const Point& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

Point sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_sub_overflow(a[i], b[i], &r[i])) throw WordOverflow();
  return r;
}

bool is_zero(const Point& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

}  // namespace clutter_algebra
