#include <doctest.h>

#include "oracles.hpp"
#include "sfs/exactq.hpp"

using namespace sfs;

TEST_SUITE("exactq") {
  TEST_CASE("rationals are reduced with positive denominator") {
    Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(BigInt(0), BigInt(-7)).str() == "0");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  }

  TEST_CASE("floor, ceil and frac of negative values") {
    Rational r(BigInt(-7), BigInt(3));
    CHECK(r.floor() == -3);
    CHECK(r.ceil() == -2);
    CHECK(r.frac() == Rational(BigInt(2), BigInt(3)));
    CHECK(Rational(5).frac().is_zero());
  }

  TEST_CASE("ordering is exact") {
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(BigInt(-1), BigInt(3)));
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  }

  TEST_CASE("parse accepts signs and whitespace") {
    CHECK(Rational::parse("  -6/4 ") == Rational(BigInt(-3), BigInt(2)));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("3/ -2") == Rational(BigInt(-3), BigInt(2)));
  }

  TEST_CASE("parse errors carry offsets") {
    try {
      Rational::parse("3/0", 10);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 12);
    }
    CHECK_THROWS_AS(Rational::parse("3/x"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
  }

  TEST_CASE("negative continued fractions") {
    CHECK(neg_cfrac_expand(Rational(BigInt(7), BigInt(3))).terms == std::vector<BigInt>{3, 2, 2});
    CHECK(neg_cfrac_expand(Rational(BigInt(5), BigInt(4))).terms == std::vector<BigInt>{2, 2, 2, 2});
    CHECK(neg_cfrac_expand(Rational(4)).terms == std::vector<BigInt>{4});
    CHECK_THROWS_AS(neg_cfrac_expand(Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(neg_cfrac_eval(NegCFrac{{3, 1}}), std::invalid_argument);
  }

  TEST_CASE("continued fraction round trip on random fractions") {
    oracle::Rng rng(101);
    for (int i = 0; i < 500; ++i) {
      long q = rng.uniform(1, 200), p = q + rng.uniform(1, 400);
      Rational r{BigInt(p), BigInt(q)};
      auto c = neg_cfrac_expand(r);
      for (const auto& a : c.terms) REQUIRE(a >= 2);
      REQUIRE(neg_cfrac_eval(c) == r);
    }
  }

  TEST_CASE("complement is an involution") {
    CHECK(complement(Rational(BigInt(3), BigInt(2))) == Rational(3));
    CHECK(complement(Rational(BigInt(12), BigInt(5))) == Rational(BigInt(12), BigInt(7)));
    oracle::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
      Rational r = oracle::random_fiber(rng, 60, false);
      REQUIRE(complement(complement(r)) == r);
      REQUIRE(r.reciprocal() + complement(r).reciprocal() == Rational(1));
    }
  }

  TEST_CASE("lcm, gcd and valuations") {
    std::vector<BigInt> v{4, 6, 10};
    CHECK(lcm_of(v) == 60);
    CHECK(gcd_of(v) == 2);
    CHECK(valuation(BigInt(48), 2) == 4);
    CHECK(valuation(Rational(BigInt(9), BigInt(8)), 2) == -3);
    CHECK_THROWS(valuation(BigInt(0), 3));
  }
}
