#include "cubepack/rational.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "cubepack/errors.hpp"

namespace cubepack {

Int floor_rat(const Rational& x) {
  Int num = numerator(x);
  Int den = denominator(x);  // always positive
  Int q = num / den;         // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

Int ceil_rat(const Rational& x) { return -floor_rat(-x); }

Rational mod_rat(const Rational& x, const Int& p) {
  Rational r = x - Rational(p) * Rational(floor_rat(x / Rational(p)));
  return r;
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t = text;
  bool negative = false;
  if (!t.empty() && t[0] == '-') {
    negative = true;
    t = t.substr(1);
  }
  std::string num = t, den = "1";
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    num = t.substr(0, slash);
    den = t.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    fail(Errc::parse, "not a rational: \"" + text + "\"");
  Int n(num), d(den);
  if (d == 0) fail(Errc::parse, "zero denominator: \"" + text + "\"");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string rational_to_string(const Rational& x) { return x.str(); }

std::string point_to_string(const Point& p) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out << ',';
    out << p[i].str();
  }
  out << ')';
  return out.str();
}

Point parse_point(const std::string& text) {
  Point result;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    // tolerate surrounding spaces in CLI input
    auto first = token.find_first_not_of(" \t");
    auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) fail(Errc::parse, "empty coordinate in \"" + text + "\"");
    result.push_back(parse_rational(token.substr(first, last - first + 1)));
  }
  if (result.empty()) fail(Errc::parse, "empty point \"" + text + "\"");
  return result;
}

ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

}  // namespace cubepack
