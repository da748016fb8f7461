#include "riskprop/rational.hpp"

#include <doctest.h>

using riskprop::parse_rational;
using riskprop::ParseError;
using riskprop::Rational;

TEST_CASE("rationals parse from fractions, integers and terminating decimals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("0.2") == Rational(1, 5));
  CHECK(parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(parse_rational("1E2") == 100);
  CHECK(parse_rational(" .5 ") == Rational(1, 2));
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* bad : {"", "abc", "1/0", "1/-2", "1.2.3", "--1", "1e", "1/2/3", "0x10", "1e99999"})
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("rationals always print as p/q and round trip") {
  CHECK(riskprop::to_string(Rational(3)) == "3/1");
  CHECK(riskprop::to_string(riskprop::make_rational(-2, 6)) == "-1/3");
  CHECK(riskprop::to_string(Rational(0)) == "0/1");
  for (long p = -20; p <= 20; ++p)
    for (long q = 1; q <= 7; ++q) {
      const Rational r = riskprop::make_rational(p, q);
      CHECK(parse_rational(riskprop::to_string(r)) == r);
    }
}
