#include "weylreal/weyl_algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace weylreal {

namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

/// Lexicographic comparison of the ascending index sequences of two masks.
int lex_compare_mask(std::uint64_t a, std::uint64_t b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb ? -1 : 1;
    a &= a - 1;
    b &= b - 1;
  }
  if (a == 0 && b == 0) return 0;
  return a == 0 ? -1 : 1;
}

int lex_compare_vec(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

/// Parity of the number of pairs (u, v) in left x right with u > v; the
/// Koszul sign of merging two ascending odd-generator blocks.
int merge_sign(std::uint64_t left, std::uint64_t right) {
  int inversions = 0;
  std::uint64_t r = right;
  while (r != 0) {
    const int v = std::countr_zero(r);
    inversions += popcount(left >> (v + 1));
    r &= r - 1;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

struct OddTerm {
  int sign;
  std::uint64_t xi;  // surviving xi factors (subset of the right operand's)
  std::uint64_t q;   // surviving q factors (subset of the left operand's)
};

/// Expands q_B xi_A into sum of sign * xi_T q_S via q_a xi_b = delta_ab -
/// xi_b q_a, processing the q block right to left.
void contract_odd(std::uint64_t B, std::uint64_t A, int sign,
                  std::uint64_t qtail, std::vector<OddTerm>& out) {
  if (B == 0) {
    out.push_back(OddTerm{sign, A, qtail});
    return;
  }
  const int bp = 63 - std::countl_zero(B);
  const std::uint64_t bit = std::uint64_t{1} << bp;
  const std::uint64_t rest = B & ~bit;
  if (A & bit) {
    // contraction: sign counts the xi factors passed before the hit
    const int hops = popcount(A & (bit - 1));
    contract_odd(rest, A & ~bit, hops % 2 == 0 ? sign : -sign, qtail, out);
  }
  // pass-through past all of xi_A; bp exceeds every index still in `rest`,
  // so prepending to qtail keeps the block ascending
  const int hops = popcount(A);
  contract_odd(rest, A, hops % 2 == 0 ? sign : -sign, qtail | bit, out);
}

}  // namespace

// ---------------------------------------------------------------------------
// Signature / Monomial

Signature::Signature(int n_, int m_) : n(n_), m(m_) {
  if (n < 0 || m < 0 || n + m < 1)
    throw std::invalid_argument("signature needs n >= 0, m >= 0, n+m >= 1");
  if (m > 64)
    throw std::invalid_argument("at most 64 odd generator pairs supported");
}

Monomial::Monomial(const Signature& sig)
    : xexp(sig.n, 0), dexp(sig.n, 0) {}

int Monomial::ddegree() const {
  return std::accumulate(dexp.begin(), dexp.end(), 0) + popcount(q);
}

int Monomial::zdegree() const {
  return std::accumulate(xexp.begin(), xexp.end(), 0) + popcount(xi);
}

int Monomial::parity() const { return (popcount(xi) + popcount(q)) & 1; }

int Monomial::compare(const Monomial& o) const {
  if (int c = lex_compare_vec(xexp, o.xexp)) return c;
  if (int c = lex_compare_mask(xi, o.xi)) return c;
  const int da = ddegree(), db = o.ddegree();
  if (da != db) return da < db ? -1 : 1;
  if (int c = lex_compare_vec(dexp, o.dexp)) return c;
  return lex_compare_mask(q, o.q);
}

// ---------------------------------------------------------------------------
// Element construction

Element::Element(const Signature& sig, int truncation)
    : sig_(sig), trunc_(truncation) {
  if (truncation < 0) throw std::invalid_argument("truncation must be >= 0");
}

Element Element::zero(const Signature& sig, int truncation) {
  return Element(sig, truncation);
}

Element Element::unit(const Signature& sig, int truncation) {
  Element e(sig, truncation);
  e.terms_.emplace(Monomial(sig), Rational(1));
  return e;
}

Element Element::x(const Signature& sig, int truncation, int mu) {
  if (mu < 1 || mu > sig.n) throw std::out_of_range("x index out of range");
  Monomial mono(sig);
  mono.xexp[mu - 1] = 1;
  return term(sig, truncation, std::move(mono), 1);
}

Element Element::xi(const Signature& sig, int truncation, int a) {
  if (a < 1 || a > sig.m) throw std::out_of_range("xi index out of range");
  Monomial mono(sig);
  mono.xi = std::uint64_t{1} << (a - 1);
  return term(sig, truncation, std::move(mono), 1);
}

Element Element::d(const Signature& sig, int truncation, int mu) {
  if (mu < 1 || mu > sig.n) throw std::out_of_range("d index out of range");
  Monomial mono(sig);
  mono.dexp[mu - 1] = 1;
  return term(sig, truncation, std::move(mono), 1);
}

Element Element::q(const Signature& sig, int truncation, int a) {
  if (a < 1 || a > sig.m) throw std::out_of_range("q index out of range");
  Monomial mono(sig);
  mono.q = std::uint64_t{1} << (a - 1);
  return term(sig, truncation, std::move(mono), 1);
}

Element Element::z(const Signature& sig, int truncation, int A) {
  if (A < 1 || A > sig.dim()) throw std::out_of_range("z index out of range");
  return A <= sig.n ? x(sig, truncation, A) : xi(sig, truncation, A - sig.n);
}

Element Element::D(const Signature& sig, int truncation, int A) {
  if (A < 1 || A > sig.dim()) throw std::out_of_range("D index out of range");
  return A <= sig.n ? d(sig, truncation, A) : q(sig, truncation, A - sig.n);
}

Element Element::term(const Signature& sig, int truncation, Monomial mono,
                      const Rational& coeff) {
  if (static_cast<int>(mono.xexp.size()) != sig.n ||
      static_cast<int>(mono.dexp.size()) != sig.n)
    throw std::invalid_argument("monomial does not match signature");
  Element e(sig, truncation);
  if (coeff != 0 && mono.ddegree() <= truncation)
    e.terms_.emplace(std::move(mono), coeff);
  return e;
}

// ---------------------------------------------------------------------------
// Queries

int Element::min_ddegree() const {
  int best = trunc_ + 1;
  for (const auto& [mono, c] : terms_) best = std::min(best, mono.ddegree());
  return best;
}

int Element::max_ddegree() const {
  int best = -1;
  for (const auto& [mono, c] : terms_) best = std::max(best, mono.ddegree());
  return best;
}

Rational Element::coeff(const Monomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

Element Element::parity_part(int p) const {
  Element r(sig_, trunc_);
  for (const auto& [mono, c] : terms_)
    if (mono.parity() == p) r.terms_.emplace(mono, c);
  return r;
}

Element Element::even_part() const { return parity_part(0); }
Element Element::odd_part() const { return parity_part(1); }

Element Element::ddegree_part(int deg) const {
  Element r(sig_, trunc_);
  for (const auto& [mono, c] : terms_)
    if (mono.ddegree() == deg) r.terms_.emplace(mono, c);
  return r;
}

Element Element::truncated(int truncation) const {
  Element r(sig_, truncation);
  for (const auto& [mono, c] : terms_)
    if (mono.ddegree() <= truncation) r.terms_.emplace(mono, c);
  return r;
}

// ---------------------------------------------------------------------------
// Arithmetic

void Element::add_term(const Monomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r(sig_, trunc_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
  return r;
}

Element& Element::operator+=(const Element& o) {
  if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
  if (trunc_ != o.trunc_) throw std::invalid_argument("truncation mismatch");
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
  if (trunc_ != o.trunc_) throw std::invalid_argument("truncation mismatch");
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element Element::operator*(const Rational& c) const {
  Element r(sig_, trunc_);
  if (c == 0) return r;
  for (const auto& [mono, v] : terms_) r.terms_.emplace(mono, v * c);
  return r;
}

Element Element::operator*(const Element& o) const {
  if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
  if (trunc_ != o.trunc_) throw std::invalid_argument("truncation mismatch");
  Element r(sig_, trunc_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      const Element prod = mono_mul(sig_, ma, mb, trunc_);
      const Rational scale = ca * cb;
      for (const auto& [mono, c] : prod.terms_) r.add_term(mono, c * scale);
    }
  return r;
}

bool Element::operator==(const Element& o) const {
  return sig_ == o.sig_ && terms_ == o.terms_;
}

Element mono_mul(const Signature& sig, const Monomial& a, const Monomial& b,
                 int truncation) {
  if (static_cast<int>(a.xexp.size()) != sig.n ||
      static_cast<int>(b.xexp.size()) != sig.n)
    throw std::invalid_argument("monomial does not match signature");

  std::vector<OddTerm> odd;
  contract_odd(a.q, b.xi, 1, 0, odd);

  // odometer over the Leibniz contraction multi-index gamma <= min(a.d, b.x)
  const int n = sig.n;
  std::vector<int> gmax(n), gamma(n, 0);
  for (int i = 0; i < n; ++i) gmax[i] = std::min(a.dexp[i], b.xexp[i]);

  Element result(sig, truncation);
  for (;;) {
    Integer even_coeff = 1;
    for (int i = 0; i < n; ++i)
      even_coeff *= binomial(a.dexp[i], gamma[i]) *
                    binomial(b.xexp[i], gamma[i]) * factorial(gamma[i]);

    for (const OddTerm& t : odd) {
      if (a.xi & t.xi) continue;  // xi repetition annihilates
      if (t.q & b.q) continue;    // q repetition annihilates
      const int sign =
          t.sign * merge_sign(a.xi, t.xi) * merge_sign(t.q, b.q);
      Monomial mono(sig);
      for (int i = 0; i < n; ++i) {
        mono.xexp[i] = a.xexp[i] + b.xexp[i] - gamma[i];
        mono.dexp[i] = a.dexp[i] - gamma[i] + b.dexp[i];
      }
      mono.xi = a.xi | t.xi;
      mono.q = t.q | b.q;
      if (mono.ddegree() > truncation) continue;
      result.add_term(mono, Rational(sign * even_coeff));
    }

    int i = 0;
    while (i < n && gamma[i] == gmax[i]) gamma[i++] = 0;
    if (i == n) break;
    ++gamma[i];
  }
  return result;
}

Element supercommutator(const Element& e1, const Element& e2) {
  if (e1.signature() != e2.signature())
    throw std::invalid_argument("signature mismatch");
  Element r(e1.signature(), e1.truncation());
  for (int p1 = 0; p1 <= 1; ++p1) {
    const Element a = e1.parity_part(p1);
    if (a.is_zero()) continue;
    for (int p2 = 0; p2 <= 1; ++p2) {
      const Element b = e2.parity_part(p2);
      if (b.is_zero()) continue;
      r += a * b;
      if (p1 == 1 && p2 == 1)
        r += b * a;
      else
        r -= b * a;
    }
  }
  return r;
}

Element graded_derivative(const Element& e, int A) {
  return supercommutator(e, Element::z(e.signature(), e.truncation(), A));
}

Element truncate(const Element& e, int truncation) {
  return e.truncated(truncation);
}

// ---------------------------------------------------------------------------
// Rendering and serialization

namespace {

void append_factor(std::ostringstream& os, bool& first, const std::string& name,
                   int exponent) {
  if (exponent == 0) return;
  if (!first) os << "*";
  first = false;
  os << name;
  if (exponent > 1) os << "^" << exponent;
}

std::string render_factors(const Monomial& mono) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < mono.xexp.size(); ++i)
    append_factor(os, first, "x" + std::to_string(i + 1), mono.xexp[i]);
  for (std::uint64_t s = mono.xi; s != 0; s &= s - 1)
    append_factor(os, first, "xi" + std::to_string(std::countr_zero(s) + 1), 1);
  for (std::size_t i = 0; i < mono.dexp.size(); ++i)
    append_factor(os, first, "d" + std::to_string(i + 1), mono.dexp[i]);
  for (std::uint64_t s = mono.q; s != 0; s &= s - 1)
    append_factor(os, first, "q" + std::to_string(std::countr_zero(s) + 1), 1);
  return os.str();
}

std::vector<int> mask_to_indices(std::uint64_t mask) {
  std::vector<int> out;
  for (std::uint64_t s = mask; s != 0; s &= s - 1)
    out.push_back(std::countr_zero(s) + 1);
  return out;
}

std::uint64_t indices_to_mask(const std::vector<int>& idx, int m) {
  std::uint64_t mask = 0;
  for (int a : idx) {
    if (a < 1 || a > m) throw std::invalid_argument("odd index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (a - 1);
    if (mask & bit) throw std::invalid_argument("repeated odd index");
    mask |= bit;
  }
  return mask;
}

}  // namespace

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const std::string factors = render_factors(mono);
    if (factors.empty())
      os << to_string(mag);
    else if (mag == 1)
      os << factors;
    else
      os << to_string(mag) << "*" << factors;
  }
  return os.str();
}

nlohmann::ordered_json Element::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = sig_.n;
  j["m"] = sig_.m;
  j["truncation"] = trunc_;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [mono, c] : terms_) {
    terms.push_back({to_string(c), mono.xexp, mask_to_indices(mono.xi),
                     mono.dexp, mask_to_indices(mono.q)});
  }
  j["terms"] = std::move(terms);
  return j;
}

Element Element::from_json(const nlohmann::ordered_json& j) {
  const Signature sig(j.at("n").get<int>(), j.at("m").get<int>());
  Element e(sig, j.at("truncation").get<int>());
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 5)
      throw std::invalid_argument("term must be [coeff, xexp, xiset, dexp, qset]");
    Monomial mono(sig);
    mono.xexp = t.at(1).get<std::vector<int>>();
    mono.dexp = t.at(3).get<std::vector<int>>();
    if (static_cast<int>(mono.xexp.size()) != sig.n ||
        static_cast<int>(mono.dexp.size()) != sig.n)
      throw std::invalid_argument("exponent vector length mismatch");
    for (int v : mono.xexp)
      if (v < 0) throw std::invalid_argument("negative exponent");
    for (int v : mono.dexp)
      if (v < 0) throw std::invalid_argument("negative exponent");
    mono.xi = indices_to_mask(t.at(2).get<std::vector<int>>(), sig.m);
    mono.q = indices_to_mask(t.at(4).get<std::vector<int>>(), sig.m);
    const Rational c = parse_rational(t.at(0).get<std::string>());
    if (e.terms_.count(mono)) throw std::invalid_argument("duplicate monomial");
    if (c != 0 && mono.ddegree() <= e.trunc_) e.terms_.emplace(mono, c);
  }
  return e;
}

}  // namespace weylreal
