#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "weylreal/rational.hpp"

using namespace weylreal;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-4/2") == Rational(-2));
  CHECK(parse_rational("1/-2") == Rational(-1, 2));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1 / 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("-"), std::invalid_argument);
}

TEST_CASE("to_string renders canonical form and round-trips") {
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Rational(-1, 720)) == "-1/720");
  CHECK(to_string(Rational(4, 2)) == "2");

  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const long long p = static_cast<long long>(rng() % 2001) - 1000;
    const long long q = static_cast<long long>(rng() % 999) + 1;
    const Rational v(p, q);
    CHECK(parse_rational(to_string(v)) == v);
  }
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  Rational harmonic;
  for (int k = 1; k <= 10; ++k) harmonic += Rational(1, k);
  CHECK(harmonic == Rational(7381, 2520));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(99);
  auto sample = [&rng]() {
    const long long p = static_cast<long long>(rng() % 41) - 20;
    const long long q = static_cast<long long>(rng() % 20) + 1;
    return Rational(p, q);
  };
  for (int i = 0; i < 300; ++i) {
    const Rational a = sample(), b = sample(), c = sample();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (a != 0) CHECK(a * (Rational(1) / a) == Rational(1));
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Integer("2432902008176640000"));

  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(40, 20) == Integer("137846528820"));

  // Pascal rule on a grid
  for (int n = 1; n <= 25; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}
