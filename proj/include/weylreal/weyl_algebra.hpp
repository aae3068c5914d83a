#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylreal/rational.hpp"

namespace weylreal {

/// Generator counts of the Weyl superalgebra: n even pairs (x_mu, d_mu) and
/// m odd pairs (xi_a, q_a). Unified 1-based index A runs over 1..n+m with
/// z_A = x_A for A <= n and z_{n+a} = xi_a; likewise D_A = d_A or q_a.
struct Signature {
  int n = 0;
  int m = 0;

  Signature() = default;
  Signature(int n_, int m_);
  int dim() const { return n + m; }
  int parity(int A) const { return A > n ? 1 : 0; }
  bool operator==(const Signature&) const = default;
};

/// A normal-ordered monomial x^xexp xi_{xiset} d^dexp q_{qset}. Coordinates
/// sit left of derivatives, odd generators carry exponent 0 or 1 and are
/// kept in ascending index order (bit k of a mask is index k+1).
struct Monomial {
  std::vector<int> xexp;
  std::uint64_t xi = 0;
  std::vector<int> dexp;
  std::uint64_t q = 0;

  Monomial() = default;
  explicit Monomial(const Signature& sig);

  int ddegree() const;  // |dexp| + |qset|: total degree in d, q
  int zdegree() const;  // |xexp| + |xiset|
  int parity() const;   // (|xiset| + |qset|) mod 2
  bool operator==(const Monomial&) const = default;

  /// Total order used for storage and rendering: z-part lexicographic,
  /// then ddegree, then D-part lexicographic.
  int compare(const Monomial& o) const;
  bool operator<(const Monomial& o) const { return compare(o) < 0; }
};

/// Element of the truncated Weyl superalgebra: a finite sum of monomials
/// with nonzero rational coefficients. All stored terms have
/// ddegree <= truncation; products drop anything beyond. Immutable in
/// spirit: every operation returns a fresh value.
class Element {
 public:
  Element(const Signature& sig, int truncation);  // zero

  static Element zero(const Signature& sig, int truncation);
  static Element unit(const Signature& sig, int truncation);
  static Element x(const Signature& sig, int truncation, int mu);
  static Element xi(const Signature& sig, int truncation, int a);
  static Element d(const Signature& sig, int truncation, int mu);
  static Element q(const Signature& sig, int truncation, int a);
  static Element z(const Signature& sig, int truncation, int A);
  static Element D(const Signature& sig, int truncation, int A);
  static Element term(const Signature& sig, int truncation, Monomial mono,
                      const Rational& coeff);

  const Signature& signature() const { return sig_; }
  int truncation() const { return trunc_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int min_ddegree() const;  // truncation+1 when zero
  int max_ddegree() const;  // -1 when zero
  Rational coeff(const Monomial& mono) const;

  /// Parity-homogeneous slices; every element splits as even + odd.
  Element even_part() const;
  Element odd_part() const;
  Element parity_part(int p) const;
  Element ddegree_part(int deg) const;

  Element truncated(int truncation) const;

  Element operator-() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator*(const Rational& c) const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);

  /// Equality is syntactic on term associations (canonical normal order
  /// makes it semantically complete); the stored truncation order does
  /// not participate.
  bool operator==(const Element& o) const;

  std::string str() const;
  nlohmann::ordered_json to_json() const;
  static Element from_json(const nlohmann::ordered_json& j);

 private:
  void add_term(const Monomial& mono, const Rational& coeff);
  friend Element mono_mul(const Signature& sig, const Monomial& a,
                          const Monomial& b, int truncation);

  Signature sig_;
  int trunc_;
  std::map<Monomial, Rational> terms_;
};

inline Element operator*(const Rational& c, const Element& e) { return e * c; }

/// Normal-ordered product of two monomials: Leibniz expansion for each d
/// passing an x, the Clifford contraction q_a xi_a = 1 - xi_a q_a for the
/// odd pairs, and a Koszul sign per transposition of odd generators.
Element mono_mul(const Signature& sig, const Monomial& a, const Monomial& b,
                 int truncation);

/// [e1, e2] = e1 e2 - (-1)^{p1 p2} e2 e1, computed on parity-homogeneous
/// slices and summed bilinearly.
Element supercommutator(const Element& e1, const Element& e2);

/// Graded derivative [e, z_A]; lowers ddegree by one on the D-subalgebra.
Element graded_derivative(const Element& e, int A);

Element truncate(const Element& e, int truncation);

}  // namespace weylreal
