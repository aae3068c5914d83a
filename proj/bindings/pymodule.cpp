// Python surface: the CLI-level operations with JSON-string payloads, so
// exact rationals cross the boundary as strings and the dict shaping stays
// in the pure-python wrapper.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "weylreal/realize.hpp"
#include "weylreal/series.hpp"
#include "weylreal/structure.hpp"
#include "weylreal/verify.hpp"

namespace py = pybind11;
using namespace weylreal;

namespace {

std::string validate_json(const std::string& text) {
  return validate(parse_spec(text)).to_json().dump();
}

std::string realize_json(const std::string& text, int order) {
  if (order < 2)
    throw std::invalid_argument("order must be >= 2 so the result can be verified");
  const AlgebraSpec spec = parse_spec(text);
  const ValidationReport vr = validate(spec);
  if (!vr.ok())
    throw std::invalid_argument("invalid structure:\n" + vr.str());
  const FlatStructure flat = flatten(spec);
  const Realization R = realization(flat, order);

  nlohmann::ordered_json j;
  j["order"] = order;
  j["verified"] =
      verify_relations(flat, R).ok() && verify_classical_limit(R);
  j["realization"] = R.to_json();
  return j.dump();
}

std::string verify_json(const std::string& text, int order) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  const AlgebraSpec spec = parse_spec(text);
  const ValidationReport vr = validate(spec);
  if (!vr.ok())
    throw std::invalid_argument("invalid structure:\n" + vr.str());
  const FlatStructure flat = flatten(spec);
  const Realization R = realization(flat, order);

  nlohmann::ordered_json j;
  j["order"] = order;
  j["relations"] = verify_relations(flat, R).to_json();
  j["classicalLimit"] = verify_classical_limit(R);
  j["shiftCommutators"] = verify_shift_commutators(flat, R).to_json();
  j["ok"] = j["relations"]["ok"].get<bool>() &&
            j["classicalLimit"].get<bool>() &&
            j["shiftCommutators"]["ok"].get<bool>();
  return j.dump();
}

std::string bernoulli_json(int order) {
  const SeriesFn b = bernoulli_coeffs(order);
  const auto Bp = bernoulli_numbers_plus(order);
  const auto Bm = bernoulli_numbers_minus(order);
  nlohmann::ordered_json j;
  auto bs = nlohmann::ordered_json::array();
  auto plus = nlohmann::ordered_json::array();
  auto minus = nlohmann::ordered_json::array();
  for (int k = 0; k <= order; ++k) {
    bs.push_back(to_string(b[k]));
    plus.push_back(to_string(Bp[k]));
    minus.push_back(to_string(Bm[k]));
  }
  j["b"] = std::move(bs);
  j["BernoulliPlusHalf"] = std::move(plus);
  j["BernoulliMinusHalf"] = std::move(minus);
  return j.dump();
}

std::string series_checks_json(int order) {
  nlohmann::ordered_json j;
  const int feq = order > 0 ? order : 8;
  const int ode = order > 0 ? std::max(order, 2) : 12;
  const int odd = order > 0 ? order : 15;
  j["functionalEquation"] = check_functional_equation(feq).holds;
  j["gMultiplicative"] = check_g_multiplicative(feq);
  j["ode"] = check_ode(ode);
  j["oddVanishing"] = check_odd_vanishing(odd);
  bool all = true;
  for (const auto& [key, val] : j.items()) all = all && val.get<bool>();
  j["ok"] = all;
  return j.dump();
}

std::string uniqueness_json(const std::string& text, int maxOrder) {
  const auto r = uniqueness_oracle(flatten(parse_spec(text)), maxOrder);
  nlohmann::ordered_json j;
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : r.coeffs) coeffs.push_back(to_string(c));
  j["coeffs"] = std::move(coeffs);
  j["constrained"] = r.constrained;
  return j.dump();
}

std::string render_canonical(const std::string& text) {
  return render_spec(parse_spec(text));
}

std::string realization_text(const std::string& text, int order) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  return realization(flatten(parse_spec(text)), order).str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact Weyl-superalgebra realizations of Lie (super)algebras: "
      "structure-constant validation, truncated realizations, and identity "
      "verification over exact rationals.";
  m.def("validate_json", &validate_json, py::arg("text"),
        "Validate an algebra file; returns the report as a JSON string.");
  m.def("realize_json", &realize_json, py::arg("text"), py::arg("order") = 4,
        "Build and verify the realization; returns a JSON string.");
  m.def("verify_json", &verify_json, py::arg("text"), py::arg("order") = 4,
        "Run the relation, classical-limit and shift-commutator checks.");
  m.def("bernoulli_json", &bernoulli_json, py::arg("order") = 4,
        "Series coefficients b_k plus both Bernoulli-number conventions.");
  m.def("series_checks_json", &series_checks_json, py::arg("order") = 0,
        "Functional-equation / ODE / odd-vanishing checks; 0 means default "
        "orders.");
  m.def("uniqueness_json", &uniqueness_json, py::arg("text"),
        py::arg("max_order") = 3,
        "Re-derive the series coefficients order by order from the "
        "relations.");
  m.def("render_spec", &render_canonical, py::arg("text"),
        "Canonical form of an algebra file.");
  m.def("realization_str", &realization_text, py::arg("text"),
        py::arg("order") = 4, "Plain-text rendering of the realization.");
}
