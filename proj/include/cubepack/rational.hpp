#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace cubepack {

// All coordinate and volume arithmetic is exact. Int is an arbitrary-precision
// integer, Rational an arbitrary-precision fraction kept in lowest terms with
// positive denominator. There is no floating point anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of R^d with exact rational coordinates.
using Point = std::vector<Rational>;

/// Largest integer <= x.
Int floor_rat(const Rational& x);

/// Smallest integer >= x.
Int ceil_rat(const Rational& x);

/// x reduced modulo p, result in [0, p). Requires p > 0.
Rational mod_rat(const Rational& x, const Int& p);

bool is_integer(const Rational& x);

/// Parses the canonical serialization "p/q" (q omitted when 1), e.g. "-3/2",
/// "0", "2". Rejects anything else: signs on the denominator, whitespace,
/// empty fields, q = 0.
Rational parse_rational(const std::string& text);

/// Canonical serialization, inverse of parse_rational.
std::string rational_to_string(const Rational& x);

/// "(x,y,...)" with canonical rational components.
std::string point_to_string(const Point& p);

/// Parses "x,y,..." (no parentheses) into a point. Throws on malformed input.
Point parse_point(const std::string& text);

struct ExtendedGcd {
  Int g;  // gcd(a, b), nonnegative
  Int x;  // a*x + b*y == g
  Int y;
};

/// Extended Euclidean algorithm; handles zero and negative inputs.
ExtendedGcd extended_gcd(Int a, Int b);

}  // namespace cubepack
