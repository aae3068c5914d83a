#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "weylreal/series.hpp"

using namespace weylreal;

TEST_CASE("bernoulli_coeffs values") {
  const SeriesFn b = bernoulli_coeffs(8);
  CHECK(b[0] == Rational(1));
  CHECK(b[1] == Rational(1, 2));
  CHECK(b[2] == Rational(1, 12));
  CHECK(b[3] == Rational(0));
  CHECK(b[4] == Rational(-1, 720));
  CHECK(b[5] == Rational(0));
  CHECK(b[6] == Rational(1, 30240));
  CHECK(b[7] == Rational(0));
  CHECK(b[8] == Rational(-1, 1209600));

  CHECK(bernoulli_coeffs(0).coeffs == std::vector<Rational>{Rational(1)});
  CHECK(bernoulli_coeffs(3).coeffs ==
        std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 12),
                              Rational(0)});
}

TEST_CASE("bernoulli number conventions differ only at k=1") {
  const auto plus = bernoulli_numbers_plus(12);
  const auto minus = bernoulli_numbers_minus(12);
  CHECK(plus[0] == Rational(1));
  CHECK(plus[1] == Rational(1, 2));
  CHECK(minus[1] == Rational(-1, 2));
  CHECK(plus[2] == Rational(1, 6));
  CHECK(plus[4] == Rational(-1, 30));
  CHECK(plus[6] == Rational(1, 42));
  CHECK(plus[8] == Rational(-1, 30));
  CHECK(plus[10] == Rational(5, 66));
  CHECK(plus[12] == Rational(-691, 2730));
  for (int k = 0; k <= 12; ++k) {
    if (k == 1) continue;
    CHECK(plus[k] == minus[k]);
  }
}

TEST_CASE("classic Bernoulli recursions agree with the generating function") {
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1 in the B_1 = -1/2 convention
  const auto B = bernoulli_numbers_minus(15);
  for (int n = 1; n <= 15; ++n) {
    Rational acc;
    for (int j = 0; j <= n; ++j) acc += Rational(binomial(n + 1, j)) * B[j];
    CHECK(acc == 0);
  }
  // same sum equals n+1 in the B_1 = +1/2 convention
  const auto Bp = bernoulli_numbers_plus(15);
  for (int n = 1; n <= 15; ++n) {
    Rational acc;
    for (int j = 0; j <= n; ++j) acc += Rational(binomial(n + 1, j)) * Bp[j];
    CHECK(acc == Rational(n + 1));
  }
}

TEST_CASE("exp coefficient fronts") {
  const SeriesFn e = exp_coeffs(6);
  CHECK(e[0] == Rational(1));
  CHECK(e[3] == Rational(1, 6));
  const SeriesFn en = exp_neg_coeffs(6);
  CHECK(en[1] == Rational(-1));
  CHECK(en[4] == Rational(1, 24));

  // e^t * e^{-t} = 1 in the truncated ring
  const auto p = TruncatedSeries1::from_fn(e, 6);
  const auto pn = TruncatedSeries1::from_fn(en, 6);
  CHECK(p * pn == TruncatedSeries1::constant(6, 1));
}

TEST_CASE("univariate series ring") {
  TruncatedSeries1 t(5);
  t.set_coeff(1, 1);
  const auto t3 = t * t * t;
  CHECK(t3.coeff(3) == Rational(1));
  CHECK(t3.derivative().coeff(2) == Rational(3));
  CHECK(t3.divided_by_t().coeff(2) == Rational(1));

  const auto f = TruncatedSeries1::from_fn(bernoulli_coeffs(8), 8);
  CHECK(f * f.reciprocal() == TruncatedSeries1::constant(8, 1));

  CHECK_THROWS_AS(TruncatedSeries1::constant(3, 1).divided_by_t(),
                  std::logic_error);
  CHECK_THROWS_AS(TruncatedSeries1(3).reciprocal(), std::logic_error);
  CHECK_THROWS_AS(TruncatedSeries1(3).truncated(4), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries1::from_fn(bernoulli_coeffs(2), 3),
                  std::invalid_argument);
}

TEST_CASE("bivariate series ring and substitution") {
  TruncatedSeries1 p(4);
  p.set_coeff(0, 3);
  p.set_coeff(1, Rational(-1, 2));
  p.set_coeff(2, 2);
  p.set_coeff(3, Rational(5, 7));
  p.set_coeff(4, -4);

  // (t+s)^2 expands with the middle coefficient 2
  TruncatedSeries1 tsq(4);
  tsq.set_coeff(2, 1);
  const auto sq = TruncatedSeries2::in_t_plus_s(tsq, 4);
  CHECK(sq.coeff(2, 0) == Rational(1));
  CHECK(sq.coeff(1, 1) == Rational(2));
  CHECK(sq.coeff(0, 2) == Rational(1));
  CHECK(sq.coeff(1, 0) == Rational(0));

  // substitution u -> t+s is a ring homomorphism
  TruncatedSeries1 q(4);
  q.set_coeff(0, 1);
  q.set_coeff(1, 4);
  q.set_coeff(3, Rational(1, 3));
  const auto lhs = TruncatedSeries2::in_t_plus_s(p * q, 4);
  const auto rhs = TruncatedSeries2::in_t_plus_s(p, 4) *
                   TruncatedSeries2::in_t_plus_s(q, 4);
  CHECK(lhs == rhs);

  // p(t+s) - p(s) is divisible by t; the quotient at t=0 is p'(s)
  const auto diff =
      TruncatedSeries2::in_t_plus_s(p, 4) - TruncatedSeries2::in_s(p, 4);
  const auto quot = diff.divided_by_t();
  const auto dp = p.derivative();
  for (int j = 0; j <= 3; ++j) CHECK(quot.coeff(0, j) == dp.coeff(j));

  CHECK_THROWS_AS(TruncatedSeries2::in_t(p, 4).divided_by_s(),
                  std::logic_error);
}

TEST_CASE("functional equation holds for the Bernoulli front") {
  for (int N : {1, 2, 4, 8}) {
    const auto r = check_functional_equation(N);
    CHECK(r.holds);
    CHECK(r.residual.is_zero());
  }
}

TEST_CASE("functional equation rejects the exponential front") {
  const auto r = check_functional_equation(exp_coeffs(9), 8);
  CHECK_FALSE(r.holds);
  // lowest nonzero residual coefficient sits at total degree 0 with value 1
  CHECK(r.residual.coeff(0, 0) == Rational(1));
  CHECK_FALSE(check_functional_equation(exp_coeffs(2), 1).holds);
}

TEST_CASE("g = 1 - t/f is multiplicative and equals exp(-t)") {
  for (int N : {1, 4, 8, 12}) CHECK(check_g_multiplicative(N));
}

TEST_CASE("ODE residual vanishes for the Bernoulli front") {
  for (int N : {2, 6, 12, 16}) CHECK(check_ode(N));
}

TEST_CASE("ODE check on degenerate and wrong fronts") {
  // f = t solves f(f-1)/t + f' = f; f = 1 does not (residual is -1)
  std::vector<Rational> linear(13);
  linear[1] = 1;
  CHECK(check_ode(SeriesFn(linear), 12));

  std::vector<Rational> one(13);
  one[0] = 1;
  CHECK_FALSE(check_ode(SeriesFn(one), 12));

  std::vector<Rational> onePlusT(13);
  onePlusT[0] = 1;
  onePlusT[1] = 1;
  CHECK_FALSE(check_ode(SeriesFn(onePlusT), 12));

  CHECK_FALSE(check_ode(exp_coeffs(12), 12));

  // constant 2 makes the residual singular at t=0; reported as failure
  std::vector<Rational> two(13);
  two[0] = 2;
  CHECK_FALSE(check_ode(SeriesFn(two), 12));
}

TEST_CASE("odd coefficients vanish from b_3 on") {
  CHECK(check_odd_vanishing(3));
  CHECK(check_odd_vanishing(15));
  CHECK(check_odd_vanishing(16));
  CHECK(check_odd_vanishing(2));  // vacuous: no odd index in range
}

TEST_CASE("all self-checks pass through N = 16") {
  for (int N = 2; N <= 16; ++N) {
    CHECK(check_functional_equation(N).holds);
    CHECK(check_g_multiplicative(N));
    CHECK(check_ode(N));
    if (N >= 3) CHECK(check_odd_vanishing(N));
  }
}

TEST_CASE("precondition violations throw") {
  CHECK_THROWS_AS(bernoulli_coeffs(-1), std::invalid_argument);
  CHECK_THROWS_AS(check_functional_equation(0), std::invalid_argument);
  CHECK_THROWS_AS(check_ode(1), std::invalid_argument);
  CHECK_THROWS_AS(check_odd_vanishing(-1), std::invalid_argument);
}
