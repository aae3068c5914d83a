#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "weylreal/realize.hpp"

namespace weylreal {

struct Defect {
  std::string family;        // "relation", "leftShift", "rightShift"
  std::vector<int> indices;  // generator indices of the offending identity
  Element defect;            // nonzero residual, truncated to the certified degree
};

/// A realization truncated at N certifies identities only to ddegree N-1:
/// the missing ddegree-(N+1) tail of f(Ct) would contribute at ddegree N
/// after one contraction, so degree N is uncertified truncation region.
struct DefectReport {
  int maxCertifiedDegree = 0;
  std::vector<Defect> violations;

  bool ok() const { return violations.empty(); }
  std::string str() const;
  nlohmann::ordered_json to_json() const;
};

/// Checks [Zhat_A, Zhat_B] = sum_J Ctilde_{ABJ} Zhat_J for every ordered
/// pair, to ddegree R.truncation - 1. Requires R built from flat at
/// truncation >= 2.
DefectReport verify_relations(const FlatStructure& flat, const Realization& R);

/// True iff the ddegree-0 part of each Zhat_A is exactly z_A.
bool verify_classical_limit(const Realization& R);

/// Checks both shift-operator commutator families entrywise to ddegree
/// R.truncation - 1:
///   [T_AB, Zhat_C] = sum_D Ctilde_{ACD} T_DB       (T = e^{Ct})
///   [S_AB, Zhat_C] = -sum_D Ctilde_{DCB} S_AD      (S = e^{-Ct})
DefectReport verify_shift_commutators(const FlatStructure& flat,
                                      const Realization& R);

struct UniquenessResult {
  std::vector<Rational> coeffs;   // solved a_1..a_maxOrder
  std::vector<bool> constrained;  // false where the system left a_k free
};

/// Re-derives the series coefficients order by order: treats
/// f = 1 + a_1 t + ... with unknown a_k, imposes the relation residual
/// at ddegree k-1 to vanish, and solves the resulting affine system for
/// each a_k in turn. Unconstrained orders (degenerate algebras) are
/// reported and continued with the canonical Bernoulli value. Throws
/// std::logic_error on an inconsistent or non-affine system, which would
/// mean a construction bug. maxOrder is capped at 4.
UniquenessResult uniqueness_oracle(const FlatStructure& flat, int maxOrder);

}  // namespace weylreal
