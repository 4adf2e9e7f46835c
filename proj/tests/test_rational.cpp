#include "operads/rational.hpp"

#include <random>

#include "doctest.h"
#include "operads/error.hpp"

using operads::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4).numerator() == -1);
  CHECK(Rational(2, -4).denominator() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), operads::Error);
}

TEST_CASE("arithmetic keeps the normal form") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 30);
  for (int i = 0; i < 200; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    for (const Rational& r : {a + b, a - b, a * b}) {
      CHECK(gcd(r.numerator(), r.denominator()) == 1);
      CHECK(r.denominator() > 0);
    }
    if (!b.is_zero()) {
      const Rational q = a / b;
      CHECK(q * b == a);
    }
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), operads::Error);
}

TEST_CASE("large values do not overflow") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000000007L);
  CHECK((big / big) == Rational(1));
  CHECK(big.numerator() > 0);
  Rational sum(0);
  for (long k = 1; k <= 50; ++k) sum += Rational(1, k);
  CHECK(sum.denominator() > 1000000);
}

TEST_CASE("parse and print round trip") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational::parse("-3/9").str() == "-1/3");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(-7, 2).str() == "-7/2");
  CHECK_THROWS_AS(Rational::parse("x"), operads::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), operads::ParseError);
  CHECK_THROWS_AS(Rational::parse(""), operads::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), operads::ParseError);
}
