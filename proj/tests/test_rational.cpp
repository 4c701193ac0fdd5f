#include <doctest.h>

#include "specker/error.hpp"
#include "specker/rational.hpp"

using specker::Rational;

TEST_CASE("rationals are stored reduced with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-4, -2) == Rational(2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).den() == 1);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(-5, 3).abs() == Rational(5, 3));
}

TEST_CASE("ordering is by value") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(-1, 2));
  CHECK(Rational(7) >= Rational(8, 3));
  CHECK(specker::max(Rational(7), Rational(8, 3)) == Rational(7));
  CHECK(specker::min(Rational(-2), Rational(1, 2)) == Rational(-2));
}

TEST_CASE("ceil") {
  CHECK(Rational(3).ceil() == 3);
  CHECK(Rational(5, 2).ceil() == 3);
  CHECK(Rational(-3, 2).ceil() == -1);
  CHECK(Rational(0).ceil() == 0);
  CHECK(Rational(1, 3).reciprocal().ceil() == 3);
}

TEST_CASE("string grammar round trip") {
  CHECK(Rational::from_string("3") == Rational(3));
  CHECK(Rational::from_string("-1/2") == Rational(-1, 2));
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK(Rational(2, 3).str() == "2/3");
  CHECK(Rational(-7).str() == "-7");
  for (const char* s : {"0", "-12", "5/9", "-3/4"}) {
    CHECK(Rational::from_string(s).str() == s);
  }
}

TEST_CASE("malformed rational strings raise ParseError") {
  CHECK_THROWS_AS(Rational::from_string(""), specker::ParseError);
  CHECK_THROWS_AS(Rational::from_string("1/"), specker::ParseError);
  CHECK_THROWS_AS(Rational::from_string("1/0"), specker::ParseError);
  CHECK_THROWS_AS(Rational::from_string("a"), specker::ParseError);
  CHECK_THROWS_AS(Rational::from_string("1.5"), specker::ParseError);
  CHECK_THROWS_AS(Rational::from_string("+3"), specker::ParseError);
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(1, 0), specker::Error);
}
