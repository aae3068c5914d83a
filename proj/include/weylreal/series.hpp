#pragma once

#include <vector>

#include "weylreal/rational.hpp"

namespace weylreal {

/// Taylor coefficients of an analytic function at 0, exact modulo t^{N+1}.
/// coeffs[k] is the k-th coefficient; order() == coeffs.size() - 1.
struct SeriesFn {
  std::vector<Rational> coeffs;

  SeriesFn() = default;
  explicit SeriesFn(std::vector<Rational> c) : coeffs(std::move(c)) {}
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs.at(k); }
};

/// Coefficients b_0..b_N of f(t) = t/(1 - e^{-t}), computed by the
/// quadratic recursion (n+1) b_n = b_{n-1} - sum_{k=1}^{n-1} b_k b_{n-k},
/// b_0 = 1. These are the Bernoulli numbers rescaled: b_k = B_k / k! with
/// B_1 = +1/2.
SeriesFn bernoulli_coeffs(int N);

/// Coefficients of e^t (1/k!) and e^{-t} ((-1)^k/k!) up to order N.
SeriesFn exp_coeffs(int N);
SeriesFn exp_neg_coeffs(int N);

/// Bernoulli numbers in both sign conventions, derived from the b_k view:
/// B_k = k! b_k has B_1 = +1/2; the alternating view (-1)^k B_k has
/// B_1 = -1/2. Only B_1 differs between the two.
std::vector<Rational> bernoulli_numbers_plus(int N);
std::vector<Rational> bernoulli_numbers_minus(int N);

/// Univariate truncated power series over Rational, exact modulo t^{N+1}.
class TruncatedSeries1 {
 public:
  explicit TruncatedSeries1(int order);
  TruncatedSeries1(int order, std::vector<Rational> coeffs);
  static TruncatedSeries1 constant(int order, const Rational& c);
  static TruncatedSeries1 from_fn(const SeriesFn& f, int order);

  int order() const { return order_; }
  const Rational& coeff(int k) const { return coeffs_.at(k); }
  void set_coeff(int k, const Rational& v) { coeffs_.at(k) = v; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  TruncatedSeries1 operator+(const TruncatedSeries1& o) const;
  TruncatedSeries1 operator-(const TruncatedSeries1& o) const;
  TruncatedSeries1 operator*(const TruncatedSeries1& o) const;
  bool operator==(const TruncatedSeries1& o) const = default;

  TruncatedSeries1 derivative() const;       // order drops by one
  TruncatedSeries1 divided_by_t() const;     // requires coeff(0) == 0
  TruncatedSeries1 reciprocal() const;       // requires coeff(0) != 0
  TruncatedSeries1 truncated(int order) const;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

/// Bivariate truncated power series in commuting (t, s), exact modulo
/// total degree > order. Carrier for the functional-equation check.
class TruncatedSeries2 {
 public:
  explicit TruncatedSeries2(int order);

  int order() const { return order_; }
  const Rational& coeff(int i, int j) const;
  void set_coeff(int i, int j, const Rational& v);
  bool is_zero() const;

  TruncatedSeries2 operator+(const TruncatedSeries2& o) const;
  TruncatedSeries2 operator-(const TruncatedSeries2& o) const;
  TruncatedSeries2 operator*(const TruncatedSeries2& o) const;
  bool operator==(const TruncatedSeries2& o) const = default;

  /// p(t), p(s), p(t+s) as bivariate series; exact, no truncation loss
  /// when p.order() >= order.
  static TruncatedSeries2 in_t(const TruncatedSeries1& p, int order);
  static TruncatedSeries2 in_s(const TruncatedSeries1& p, int order);
  static TruncatedSeries2 in_t_plus_s(const TruncatedSeries1& p, int order);

  /// Coefficient reindexing; every surviving monomial must carry the
  /// divided variable, otherwise throws (malformed residual construction).
  TruncatedSeries2 divided_by_t() const;
  TruncatedSeries2 divided_by_s() const;
  TruncatedSeries2 truncated(int order) const;

 private:
  std::size_t index(int i, int j) const;
  int order_;
  std::vector<Rational> coeffs_;  // (i,j) with i+j <= order
};

struct FunctionalEquationResult {
  bool holds = false;
  TruncatedSeries2 residual;
};

/// Checks f(t)(f(t+s)-f(s))/t + f(s)(f(t+s)-f(t))/s = f(t+s) modulo total
/// degree N+1 for the given coefficient front (default: bernoulli_coeffs).
/// Internally works one order higher so the divisions lose nothing.
FunctionalEquationResult check_functional_equation(const SeriesFn& f, int N);
FunctionalEquationResult check_functional_equation(int N);

/// g(t) = 1 - t/f(t) must satisfy g(t)g(s) = g(t+s) and equal e^{-t}.
bool check_g_multiplicative(int N);

/// Residual of f(f-1)/t + f' - f modulo t^N, plus the logistic form
/// g' = g(1-g) for g = f/t checked on the shifted coefficient recursion.
bool check_ode(const SeriesFn& f, int N);
bool check_ode(int N);

/// b_k = 0 for every odd k with 3 <= k <= N; vacuously true for N < 3.
bool check_odd_vanishing(int N);

}  // namespace weylreal
