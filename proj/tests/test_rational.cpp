#include <doctest.h>

#include "gwmast/error.hpp"
#include "gwmast/rational.hpp"

using namespace gwmast;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational(" 6/4 ") == Rational(3, 2));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-2/6") == Rational(-1, 3));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational(".5") == Rational(1, 2));
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("."), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("fraction strings always carry a denominator") {
  CHECK(to_fraction_string(Rational(20, 3)) == "20/3");
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  CHECK(to_fraction_string(Rational(-4, 6)) == "-2/3");
}

TEST_CASE("twelve significant digits") {
  CHECK(to_decimal12(Rational(20, 3)) == 6.66666666667);
  CHECK(to_decimal12(Rational(1, 8)) == 0.125);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("error codes render by name") {
  Error e(ErrorCode::NotCritical, "mean 2");
  CHECK(e.code() == ErrorCode::NotCritical);
  CHECK(std::string(e.what()) == "NotCritical: mean 2");
  ParseError p(7, "unbalanced");
  CHECK(p.offset() == 7);
  CHECK(p.code() == ErrorCode::ParseError);
}
