#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylreal/rational.hpp"

namespace weylreal {

/// Structure constants of a Lie superalgebra g0 + g1 with vanishing
/// odd-odd bracket: [X_mu, X_nu] = sum_a C_{mu nu a} X_a and
/// [th_a, X_nu] = sum_b K_{a nu b} th_b. Maps hold nonzero entries only;
/// C is kept with both orientations so lookups are plain.
struct AlgebraSpec {
  int n = 0;
  int m = 0;
  std::map<std::array<int, 3>, Rational> C;  // (mu, nu, alpha)
  std::map<std::array<int, 3>, Rational> K;  // (a, nu, b)

  Rational c(int mu, int nu, int alpha) const;
  Rational k(int a, int nu, int b) const;

  /// Writes both orientations (mu,nu,alpha) and (nu,mu,alpha); zero erases.
  void set_c(int mu, int nu, int alpha, const Rational& v);
  void set_k(int a, int nu, int b, const Rational& v);

  bool operator==(const AlgebraSpec&) const = default;
};

struct Violation {
  std::string family;       // "antisymmetry", "evenJacobi", "mixedJacobi", ...
  std::vector<int> indices;
  Rational residual;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string str() const;
  nlohmann::ordered_json to_json() const;
};

/// Checks antisymmetry of C, the even Jacobi identity
///   sum_rho (C_{mu a rho} C_{rho b nu} + C_{a b rho} C_{rho mu nu}
///            + C_{b mu rho} C_{rho a nu}) = 0,
/// and the mixed identity
///   sum_b (K_{a nu b} K_{b mu c} - K_{a mu b} K_{b nu c})
///   + sum_rho C_{mu nu rho} K_{a rho c} = 0.
/// Violations are data, not errors; an empty report means valid.
ValidationReport validate(const AlgebraSpec& spec);

/// Unified structure constants Ctilde_{ABJ} over the flattened index
/// 1..n+m with the sparsity pattern
///   Ctilde_{mu nu lam} = C_{mu nu lam},
///   Ctilde_{mu,n+a,n+b} = -K_{a mu b},
///   Ctilde_{n+a,mu,n+b} = +K_{a mu b},  all other entries zero.
struct FlatStructure {
  int n = 0;
  int m = 0;
  std::map<std::array<int, 3>, Rational> ctilde;  // (A, B, J), nonzero only

  int dim() const { return n + m; }
  int parity(int A) const { return A > n ? 1 : 0; }
  Rational ct(int A, int B, int J) const;

  bool operator==(const FlatStructure&) const = default;
};

/// Requires validate(spec).ok(); re-checks the flat ungraded Jacobi
/// identity on the output as an internal cross-check.
FlatStructure flatten(const AlgebraSpec& spec);

/// Same flattening with no validity requirement; for probing how the flat
/// Jacobi identity fails on perturbed inputs.
FlatStructure flatten_unchecked(const AlgebraSpec& spec);

/// All (A,B,C,D) with nonzero residual of
///   sum_J (Ct_{ABJ} Ct_{JCD} + Ct_{BCJ} Ct_{JAD} + Ct_{CAJ} Ct_{JBD}).
std::vector<Violation> flat_jacobi_violations(const FlatStructure& flat);

/// Parses the algebra file format: an object {"n": int, "m": int,
/// "C": [[mu, nu, alpha, coeff]...], "K": [[a, nu, b, coeff]...]} with
/// 1-based indices and coeff either "p/q" strings or plain integers.
/// Missing C/K mean zero. Antisymmetric completion is applied when only
/// one orientation of a C entry is given; explicitly inconsistent
/// orientations, duplicate index triples, out-of-range indices and
/// malformed rationals all throw std::invalid_argument.
AlgebraSpec parse_spec(const std::string& text);

/// Inverse of parse_spec up to entry normalization: emits each C entry
/// once (mu < nu orientation) in sorted order.
std::string render_spec(const AlgebraSpec& spec);

/// Every C, K entry multiplied by h. Jacobi is quadratic, so validity is
/// preserved for any rational h.
AlgebraSpec scaled(const AlgebraSpec& spec, const Rational& h);

/// Hand-built valid corpus entries, by family name.
AlgebraSpec abelian_spec(int n, int m);
AlgebraSpec solvable_2d_spec();    // [X_1, X_2] = X_1
AlgebraSpec heisenberg_spec();     // [X_1, X_2] = X_3 central
AlgebraSpec super_n1m1_spec();     // [th_1, X_1] = th_1
AlgebraSpec super_n2m1_spec();     // [X_1,X_2] = X_1, [th_1, X_2] = th_1

/// Rejection-sampled valid spec with entries in {0, +-1, +-1/2}; falls
/// back to abelian if no sample validates (does not happen at these
/// dimensions in practice). Deterministic for a given rng state.
AlgebraSpec random_valid_spec(std::mt19937_64& rng, int n, int m);

}  // namespace weylreal
