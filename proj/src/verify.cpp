#include "weylreal/verify.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace weylreal {

std::string DefectReport::str() const {
  std::ostringstream os;
  if (ok()) {
    os << "ok: certified to ddegree " << maxCertifiedDegree << "\n";
    return os.str();
  }
  os << "FAILED: " << violations.size() << " violation(s) within ddegree "
     << maxCertifiedDegree << "\n";
  for (const auto& v : violations) {
    os << "  " << v.family << " (";
    for (std::size_t i = 0; i < v.indices.size(); ++i)
      os << (i ? "," : "") << v.indices[i];
    os << "): defect = " << v.defect.str() << "\n";
  }
  return os.str();
}

nlohmann::ordered_json DefectReport::to_json() const {
  nlohmann::ordered_json j;
  j["ok"] = ok();
  j["maxCertifiedDegree"] = maxCertifiedDegree;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : violations)
    arr.push_back({{"family", v.family},
                   {"indices", v.indices},
                   {"defect", v.defect.to_json()},
                   {"text", v.defect.str()}});
  j["violations"] = std::move(arr);
  return j;
}

namespace {

void require_match(const FlatStructure& flat, const Realization& R) {
  if (!(R.source == flat))
    throw std::invalid_argument(
        "realization was not built from this structure");
  if (static_cast<int>(R.zhats.size()) != flat.dim())
    throw std::invalid_argument("realization generator count mismatch");
}

/// [Zhat_A, Zhat_B] - sum_J Ctilde_{ABJ} Zhat_J, truncated to `deg`.
Element relation_defect(const FlatStructure& flat, const Realization& R,
                        int A, int B, int deg) {
  Element lhs = supercommutator(R.zhat(A), R.zhat(B));
  for (int J = 1; J <= flat.dim(); ++J) {
    const Rational c = flat.ct(A, B, J);
    if (c != 0) lhs -= R.zhat(J) * c;
  }
  return truncate(lhs, deg);
}

}  // namespace

DefectReport verify_relations(const FlatStructure& flat,
                              const Realization& R) {
  require_match(flat, R);
  const int N = R.truncation;
  if (N < 2)
    throw std::invalid_argument("relation check needs truncation >= 2");

  DefectReport report;
  report.maxCertifiedDegree = N - 1;
  for (int A = 1; A <= flat.dim(); ++A)
    for (int B = 1; B <= flat.dim(); ++B) {
      Element defect = relation_defect(flat, R, A, B, N - 1);
      if (!defect.is_zero())
        report.violations.push_back(
            Defect{"relation", {A, B}, std::move(defect)});
    }
  return report;
}

bool verify_classical_limit(const Realization& R) {
  const Signature sig = R.signature();
  for (int A = 1; A <= sig.dim(); ++A) {
    if (R.zhat(A).ddegree_part(0) != Element::z(sig, R.truncation, A))
      return false;
  }
  return true;
}

DefectReport verify_shift_commutators(const FlatStructure& flat,
                                      const Realization& R) {
  require_match(flat, R);
  const int N = R.truncation;
  if (N < 2)
    throw std::invalid_argument("shift check needs truncation >= 2");
  const auto [T, S] = shift_operators(flat, N);

  DefectReport report;
  report.maxCertifiedDegree = N - 1;
  const int dim = flat.dim();
  for (int A = 1; A <= dim; ++A)
    for (int B = 1; B <= dim; ++B)
      for (int C = 1; C <= dim; ++C) {
        Element left = supercommutator(T.at(A, B), R.zhat(C));
        for (int D = 1; D <= dim; ++D) {
          const Rational c = flat.ct(A, C, D);
          if (c != 0) left -= T.at(D, B) * c;
        }
        left = truncate(left, N - 1);
        if (!left.is_zero())
          report.violations.push_back(
              Defect{"leftShift", {A, B, C}, std::move(left)});

        Element right = supercommutator(S.at(A, B), R.zhat(C));
        for (int D = 1; D <= dim; ++D) {
          const Rational c = flat.ct(D, C, B);
          if (c != 0) right += S.at(A, D) * c;
        }
        right = truncate(right, N - 1);
        if (!right.is_zero())
          report.violations.push_back(
              Defect{"rightShift", {A, B, C}, std::move(right)});
      }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

/// Total relation residual truncated to ddegree k-1 for the front
/// f = 1 + a_1 t + ... + a_k t^k, realized at truncation k.
std::vector<Element> oracle_residuals(const FlatStructure& flat,
                                      const std::vector<Rational>& front,
                                      int k) {
  const SeriesFn fn{std::vector<Rational>(front.begin(),
                                          front.begin() + (k + 1))};
  const Realization R = realization_with(flat, fn, k);
  std::vector<Element> out;
  for (int A = 1; A <= flat.dim(); ++A)
    for (int B = 1; B <= flat.dim(); ++B)
      out.push_back(relation_defect(flat, R, A, B, k - 1));
  return out;
}

}  // namespace

UniquenessResult uniqueness_oracle(const FlatStructure& flat, int maxOrder) {
  if (maxOrder < 1 || maxOrder > 4)
    throw std::invalid_argument("uniqueness oracle supports orders 1..4");
  if (!flat_jacobi_violations(flat).empty())
    throw std::invalid_argument("structure is not valid");

  const SeriesFn bern = bernoulli_coeffs(maxOrder);
  UniquenessResult result;
  std::vector<Rational> front(maxOrder + 1);
  front[0] = 1;

  for (int k = 1; k <= maxOrder; ++k) {
    front[k] = 0;
    const auto P = oracle_residuals(flat, front, k);
    front[k] = 1;
    const auto P1 = oracle_residuals(flat, front, k);

    // residual is affine in a_k: residual(a) = P + a*(P1 - P) termwise
    bool solved = false;
    Rational ak;
    for (std::size_t i = 0; i < P.size(); ++i) {
      const Element slope = P1[i] - P[i];
      for (const auto& [mono, q] : slope.terms()) {
        const Rational p = P[i].coeff(mono);
        const Rational candidate = -p / q;
        if (!solved) {
          ak = candidate;
          solved = true;
        } else if (candidate != ak) {
          throw std::logic_error("inconsistent linear system for order " +
                                 std::to_string(k));
        }
      }
    }
    if (solved) {
      // remaining equations have zero slope; their constants must vanish
      front[k] = ak;
      for (const auto& e : oracle_residuals(flat, front, k))
        if (!e.is_zero())
          throw std::logic_error("inconsistent linear system for order " +
                                 std::to_string(k));
      result.coeffs.push_back(ak);
      result.constrained.push_back(true);
    } else {
      for (const auto& e : P)
        if (!e.is_zero())
          throw std::logic_error(
              "inconsistent system for order " + std::to_string(k) +
              ": residual does not depend on the coefficient");
      // no equation mentions a_k; continue with the canonical value
      front[k] = bern[k];
      result.coeffs.push_back(bern[k]);
      result.constrained.push_back(false);
    }
  }
  return result;
}

}  // namespace weylreal
