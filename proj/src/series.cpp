#include "weylreal/series.hpp"

#include <stdexcept>

namespace weylreal {

SeriesFn bernoulli_coeffs(int N) {
  if (N < 0) throw std::invalid_argument("bernoulli_coeffs: negative order");
  std::vector<Rational> b(N + 1);
  b[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Rational acc = b[n - 1];
    for (int k = 1; k <= n - 1; ++k) acc -= b[k] * b[n - k];
    b[n] = acc / (n + 1);
  }
  return SeriesFn(std::move(b));
}

SeriesFn exp_coeffs(int N) {
  std::vector<Rational> c(N + 1);
  for (int k = 0; k <= N; ++k) c[k] = Rational(1, factorial(k));
  return SeriesFn(std::move(c));
}

SeriesFn exp_neg_coeffs(int N) {
  std::vector<Rational> c(N + 1);
  for (int k = 0; k <= N; ++k)
    c[k] = Rational(k % 2 == 0 ? 1 : -1, factorial(k));
  return SeriesFn(std::move(c));
}

std::vector<Rational> bernoulli_numbers_plus(int N) {
  const SeriesFn b = bernoulli_coeffs(N);
  std::vector<Rational> B(N + 1);
  for (int k = 0; k <= N; ++k) B[k] = b[k] * Rational(factorial(k));
  return B;
}

std::vector<Rational> bernoulli_numbers_minus(int N) {
  std::vector<Rational> B = bernoulli_numbers_plus(N);
  for (int k = 1; k <= N; k += 2) B[k] = -B[k];
  return B;
}

// ---------------------------------------------------------------------------
// TruncatedSeries1

TruncatedSeries1::TruncatedSeries1(int order)
    : order_(order), coeffs_(order + 1) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

TruncatedSeries1::TruncatedSeries1(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.resize(order + 1);
}

TruncatedSeries1 TruncatedSeries1::constant(int order, const Rational& c) {
  TruncatedSeries1 r(order);
  r.coeffs_[0] = c;
  return r;
}

TruncatedSeries1 TruncatedSeries1::from_fn(const SeriesFn& f, int order) {
  if (f.order() < order)
    throw std::invalid_argument("coefficient front shorter than series order");
  TruncatedSeries1 r(order);
  for (int k = 0; k <= order; ++k) r.coeffs_[k] = f[k];
  return r;
}

bool TruncatedSeries1::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

TruncatedSeries1 TruncatedSeries1::operator+(const TruncatedSeries1& o) const {
  if (order_ != o.order_) throw std::invalid_argument("series order mismatch");
  TruncatedSeries1 r(order_);
  for (int k = 0; k <= order_; ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  return r;
}

TruncatedSeries1 TruncatedSeries1::operator-(const TruncatedSeries1& o) const {
  if (order_ != o.order_) throw std::invalid_argument("series order mismatch");
  TruncatedSeries1 r(order_);
  for (int k = 0; k <= order_; ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
  return r;
}

TruncatedSeries1 TruncatedSeries1::operator*(const TruncatedSeries1& o) const {
  if (order_ != o.order_) throw std::invalid_argument("series order mismatch");
  TruncatedSeries1 r(order_);
  for (int i = 0; i <= order_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order_; ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

TruncatedSeries1 TruncatedSeries1::derivative() const {
  if (order_ == 0) return TruncatedSeries1(0);
  TruncatedSeries1 r(order_ - 1);
  for (int k = 1; k <= order_; ++k) r.coeffs_[k - 1] = coeffs_[k] * k;
  return r;
}

TruncatedSeries1 TruncatedSeries1::divided_by_t() const {
  if (coeffs_[0] != 0)
    throw std::logic_error("division by t of a series with constant term");
  if (order_ == 0) return TruncatedSeries1(0);
  TruncatedSeries1 r(order_ - 1);
  for (int k = 1; k <= order_; ++k) r.coeffs_[k - 1] = coeffs_[k];
  return r;
}

TruncatedSeries1 TruncatedSeries1::reciprocal() const {
  if (coeffs_[0] == 0)
    throw std::logic_error("reciprocal of a series with zero constant term");
  TruncatedSeries1 r(order_);
  r.coeffs_[0] = Rational(1) / coeffs_[0];
  for (int k = 1; k <= order_; ++k) {
    Rational acc;
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
    r.coeffs_[k] = -acc / coeffs_[0];
  }
  return r;
}

TruncatedSeries1 TruncatedSeries1::truncated(int order) const {
  if (order > order_)
    throw std::invalid_argument("cannot extend a truncated series");
  TruncatedSeries1 r(order);
  for (int k = 0; k <= order; ++k) r.coeffs_[k] = coeffs_[k];
  return r;
}

// ---------------------------------------------------------------------------
// TruncatedSeries2

TruncatedSeries2::TruncatedSeries2(int order)
    : order_(order),
      coeffs_(static_cast<std::size_t>(order + 1) * (order + 2) / 2) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

std::size_t TruncatedSeries2::index(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_)
    throw std::out_of_range("bivariate coefficient index");
  // row i holds j = 0..order-i
  const std::size_t off =
      static_cast<std::size_t>(i) * (2 * (order_ + 1) - i + 1) / 2;
  return off + j;
}

const Rational& TruncatedSeries2::coeff(int i, int j) const {
  return coeffs_[index(i, j)];
}

void TruncatedSeries2::set_coeff(int i, int j, const Rational& v) {
  coeffs_[index(i, j)] = v;
}

bool TruncatedSeries2::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

TruncatedSeries2 TruncatedSeries2::operator+(const TruncatedSeries2& o) const {
  if (order_ != o.order_) throw std::invalid_argument("series order mismatch");
  TruncatedSeries2 r(order_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  return r;
}

TruncatedSeries2 TruncatedSeries2::operator-(const TruncatedSeries2& o) const {
  if (order_ != o.order_) throw std::invalid_argument("series order mismatch");
  TruncatedSeries2 r(order_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
  return r;
}

TruncatedSeries2 TruncatedSeries2::operator*(const TruncatedSeries2& o) const {
  if (order_ != o.order_) throw std::invalid_argument("series order mismatch");
  TruncatedSeries2 r(order_);
  for (int i1 = 0; i1 <= order_; ++i1)
    for (int j1 = 0; i1 + j1 <= order_; ++j1) {
      const Rational& c1 = coeff(i1, j1);
      if (c1 == 0) continue;
      for (int i2 = 0; i1 + j1 + i2 <= order_; ++i2)
        for (int j2 = 0; i1 + j1 + i2 + j2 <= order_; ++j2) {
          const Rational& c2 = o.coeff(i2, j2);
          if (c2 == 0) continue;
          r.coeffs_[r.index(i1 + i2, j1 + j2)] += c1 * c2;
        }
    }
  return r;
}

TruncatedSeries2 TruncatedSeries2::in_t(const TruncatedSeries1& p, int order) {
  if (p.order() < order)
    throw std::invalid_argument("univariate input shorter than target order");
  TruncatedSeries2 r(order);
  for (int i = 0; i <= order; ++i) r.set_coeff(i, 0, p.coeff(i));
  return r;
}

TruncatedSeries2 TruncatedSeries2::in_s(const TruncatedSeries1& p, int order) {
  if (p.order() < order)
    throw std::invalid_argument("univariate input shorter than target order");
  TruncatedSeries2 r(order);
  for (int j = 0; j <= order; ++j) r.set_coeff(0, j, p.coeff(j));
  return r;
}

TruncatedSeries2 TruncatedSeries2::in_t_plus_s(const TruncatedSeries1& p,
                                               int order) {
  if (p.order() < order)
    throw std::invalid_argument("univariate input shorter than target order");
  TruncatedSeries2 r(order);
  for (int k = 0; k <= order; ++k) {
    if (p.coeff(k) == 0) continue;
    for (int i = 0; i <= k; ++i)
      r.set_coeff(i, k - i, p.coeff(k) * Rational(binomial(k, i)));
  }
  return r;
}

TruncatedSeries2 TruncatedSeries2::divided_by_t() const {
  for (int j = 0; j <= order_; ++j)
    if (coeff(0, j) != 0)
      throw std::logic_error("division by t of a bivariate series not divisible by t");
  TruncatedSeries2 r(order_ - 1);
  for (int i = 1; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j) r.set_coeff(i - 1, j, coeff(i, j));
  return r;
}

TruncatedSeries2 TruncatedSeries2::divided_by_s() const {
  for (int i = 0; i <= order_; ++i)
    if (coeff(i, 0) != 0)
      throw std::logic_error("division by s of a bivariate series not divisible by s");
  TruncatedSeries2 r(order_ - 1);
  for (int i = 0; i <= order_; ++i)
    for (int j = 1; i + j <= order_; ++j) r.set_coeff(i, j - 1, coeff(i, j));
  return r;
}

TruncatedSeries2 TruncatedSeries2::truncated(int order) const {
  if (order > order_)
    throw std::invalid_argument("cannot extend a truncated series");
  TruncatedSeries2 r(order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) r.set_coeff(i, j, coeff(i, j));
  return r;
}

// ---------------------------------------------------------------------------
// Identity checks

FunctionalEquationResult check_functional_equation(const SeriesFn& f, int N) {
  if (N < 1) throw std::invalid_argument("functional equation needs N >= 1");
  // Work one order higher so the divisions by t and s stay exact through N.
  const int W = N + 1;
  const TruncatedSeries1 p = TruncatedSeries1::from_fn(f, W);
  const TruncatedSeries2 Ft = TruncatedSeries2::in_t(p, W);
  const TruncatedSeries2 Fs = TruncatedSeries2::in_s(p, W);
  const TruncatedSeries2 Fts = TruncatedSeries2::in_t_plus_s(p, W);

  const TruncatedSeries2 A = (Fts - Fs).divided_by_t();  // order N
  const TruncatedSeries2 B = (Fts - Ft).divided_by_s();  // order N
  const TruncatedSeries2 residual =
      Ft.truncated(N) * A + Fs.truncated(N) * B - Fts.truncated(N);
  return FunctionalEquationResult{residual.is_zero(), residual};
}

FunctionalEquationResult check_functional_equation(int N) {
  return check_functional_equation(bernoulli_coeffs(N + 1), N);
}

bool check_g_multiplicative(int N) {
  if (N < 1) throw std::invalid_argument("multiplicativity check needs N >= 1");
  const int W = N + 1;
  const TruncatedSeries1 f = TruncatedSeries1::from_fn(bernoulli_coeffs(W), W);
  const TruncatedSeries1 recip = f.reciprocal();

  // g = 1 - t/f
  TruncatedSeries1 g(W);
  g.set_coeff(0, 1);
  for (int k = 1; k <= W; ++k) g.set_coeff(k, -recip.coeff(k - 1));

  // g must be the truncation of e^{-t}
  const SeriesFn en = exp_neg_coeffs(W);
  for (int k = 0; k <= W; ++k)
    if (g.coeff(k) != en[k]) return false;

  const TruncatedSeries1 gn = g.truncated(N);
  const TruncatedSeries2 Gt = TruncatedSeries2::in_t(gn, N);
  const TruncatedSeries2 Gs = TruncatedSeries2::in_s(gn, N);
  const TruncatedSeries2 Gts = TruncatedSeries2::in_t_plus_s(gn, N);
  return (Gt * Gs - Gts).is_zero();
}

bool check_ode(const SeriesFn& f, int N) {
  if (N < 2) throw std::invalid_argument("ODE check needs N >= 2");
  if (f.order() < N)
    throw std::invalid_argument("coefficient front shorter than check order");
  const TruncatedSeries1 p = TruncatedSeries1::from_fn(f, N);

  // f(f-1)/t + f' - f, exact through degree N-1
  const TruncatedSeries1 one = TruncatedSeries1::constant(N, 1);
  const TruncatedSeries1 prod = p * (p - one);
  if (prod.coeff(0) != 0) return false;  // residual would have a 1/t pole
  const TruncatedSeries1 lead = prod.divided_by_t();
  const TruncatedSeries1 residual =
      lead + p.derivative() - p.truncated(N - 1);
  if (!residual.is_zero()) return false;

  // Logistic form g' = g(1-g) for g = f/t. Multiplying by t^2 turns it
  // into the coefficient identity (n-1) b_n = b_{n-1} - sum_j b_j b_{n-j}.
  for (int n = 0; n <= N; ++n) {
    Rational rhs = (n >= 1) ? f[n - 1] : Rational(0);
    for (int j = 0; j <= n; ++j) rhs -= f[j] * f[n - j];
    if (Rational(n - 1) * f[n] != rhs) return false;
  }
  return true;
}

bool check_ode(int N) { return check_ode(bernoulli_coeffs(N), N); }

bool check_odd_vanishing(int N) {
  if (N < 0) throw std::invalid_argument("odd-vanishing check needs N >= 0");
  const SeriesFn b = bernoulli_coeffs(N);
  for (int k = 3; k <= N; k += 2)
    if (b[k] != 0) return false;
  return true;
}

}  // namespace weylreal
