#include <doctest.h>

#include "cubepack/errors.hpp"
#include "cubepack/rational.hpp"

using namespace cubepack;

TEST_CASE("rational parse / serialize round trip") {
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("2") == Rational(2));
  CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_to_string(Rational(0)) == "0");
  CHECK(rational_to_string(Rational(4, 2)) == "2");
  CHECK(rational_to_string(Rational(2, 4)) == "1/2");  // lowest terms

  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(" 1"), Error);
}

TEST_CASE("floor / ceil / mod") {
  CHECK(floor_rat(Rational(3, 2)) == 1);
  CHECK(floor_rat(Rational(-3, 2)) == -2);
  CHECK(floor_rat(Rational(2)) == 2);
  CHECK(floor_rat(Rational(-2)) == -2);
  CHECK(ceil_rat(Rational(3, 2)) == 2);
  CHECK(ceil_rat(Rational(-3, 2)) == -1);
  CHECK(mod_rat(Rational(7, 2), 2) == Rational(3, 2));
  CHECK(mod_rat(Rational(-1, 2), 2) == Rational(3, 2));
  CHECK(mod_rat(Rational(4), 2) == 0);
}

TEST_CASE("point parse and formatting") {
  Point p = parse_point("1/2, -3, 0");
  REQUIRE(p.size() == 3);
  CHECK(p[0] == Rational(1, 2));
  CHECK(p[1] == Rational(-3));
  CHECK(point_to_string(p) == "(1/2,-3,0)");
  CHECK_THROWS_AS(parse_point(""), Error);
  CHECK_THROWS_AS(parse_point("1,,2"), Error);
}

TEST_CASE("extended gcd") {
  auto check_identity = [](Int a, Int b) {
    ExtendedGcd eg = extended_gcd(a, b);
    CHECK(eg.g >= 0);
    CHECK(a * eg.x + b * eg.y == eg.g);
  };
  // the two fixture pairs used by the basis certificates
  ExtendedGcd eg = extended_gcd(15, 2);
  CHECK(eg.g == 1);
  CHECK(eg.x == 1);
  CHECK(eg.y == -7);
  eg = extended_gcd(6, 5);
  CHECK(eg.g == 1);
  CHECK(eg.x == 1);
  CHECK(eg.y == -1);

  check_identity(0, 5);
  check_identity(5, 0);
  check_identity(-15, 2);
  check_identity(12, 18);
  check_identity(Int("999999000001"), Int("123456789"));
}
