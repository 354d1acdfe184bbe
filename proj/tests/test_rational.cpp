#include <doctest.h>

#include <random>

#include "gbinterp/errors.hpp"
#include "gbinterp/rational.hpp"
#include "test_util.hpp"

using namespace gbinterp;
using gbinterp::testing::random_nonzero_rational;
using gbinterp::testing::random_rational;

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::from_string("17").str() == "17");
  CHECK(Rational::from_string("-4/6").str() == "-2/3");
  CHECK(Rational::from_string("1/3").str() == "1/3");
  CHECK(Rational::from_string("0.5").str() == "1/2");
  CHECK(Rational::from_string("0.1").str() == "1/10");
  CHECK(Rational::from_string("-3.25").str() == "-13/4");
  CHECK(Rational::from_string("0.000015").str() == "3/200000");
  CHECK(Rational::from_string("+2.0").str() == "2");
  CHECK(Rational::from_string("0.000015") == Rational(15, 1000000));
}

TEST_CASE("rational parsing rejects malformed literals") {
  CHECK_THROWS_AS(Rational::from_string(""), ParseError);
  CHECK_THROWS_AS(Rational::from_string("abc"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("1.2.3"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("1e5"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("1/"), ParseError);
  CHECK_THROWS_AS(Rational::from_string("."), ParseError);
  CHECK_THROWS_AS(Rational::from_string("--2"), ParseError);
}

TEST_CASE("rational canonical form") {
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(7, 7).is_one());
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational arithmetic forms a field") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = random_rational(rng), b = random_rational(rng),
             c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    Rational nz = random_nonzero_rational(rng);
    CHECK(nz * nz.inverse() == Rational(1));
    CHECK((a / nz) * nz == a);
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("rational powers and ordering") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-2).pow(2) == Rational(4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(3, 2).to_double() == doctest::Approx(1.5));
}
