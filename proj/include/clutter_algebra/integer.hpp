#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace clutter_algebra {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Machine-word vectors for the enumeration kernels.  Every conversion and
// every arithmetic step on them is overflow-checked.
using Point = std::vector<std::int64_t>;

std::string to_string(const Integer& x);
// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);
std::string to_string(const IntVector& v, const char* sep = " ");
std::string to_string(const RatVector& v, const char* sep = " ");
std::string to_string(const Point& v, const char* sep = " ");

Rational parse_rational(const std::string& s);

Integer gcd_of(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const IntVector& b);

// Divide by the gcd of the entries and make the first nonzero entry positive.
IntVector primitive(IntVector v);
// Divide by the gcd only; for facet normals and rays, whose sign matters.
IntVector primitive_oriented(IntVector v);

bool is_zero(const IntVector& v);
bool is_integral(const RatVector& v);
IntVector numerators(const RatVector& v);  // requires is_integral
RatVector to_rational(const IntVector& v);

std::int64_t to_small(const Integer& x);
Point to_small(const IntVector& v);
IntVector to_big(const Point& v);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_dot(const Point& a, const Point& b);

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
bool is_zero(const Point& v);

}  // namespace clutter_algebra
