#include "weylreal/structure.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace weylreal {

namespace {

Rational lookup(const std::map<std::array<int, 3>, Rational>& m,
                std::array<int, 3> key) {
  const auto it = m.find(key);
  return it == m.end() ? Rational(0) : it->second;
}

void store(std::map<std::array<int, 3>, Rational>& m, std::array<int, 3> key,
           const Rational& v) {
  if (v == 0)
    m.erase(key);
  else
    m[key] = v;
}

void check_range(int v, int lo, int hi, const std::string& what) {
  if (v < lo || v > hi)
    throw std::invalid_argument(what + " index " + std::to_string(v) +
                                " out of range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
}

}  // namespace

Rational AlgebraSpec::c(int mu, int nu, int alpha) const {
  return lookup(C, {mu, nu, alpha});
}

Rational AlgebraSpec::k(int a, int nu, int b) const {
  return lookup(K, {a, nu, b});
}

void AlgebraSpec::set_c(int mu, int nu, int alpha, const Rational& v) {
  check_range(mu, 1, n, "C");
  check_range(nu, 1, n, "C");
  check_range(alpha, 1, n, "C");
  if (mu == nu && v != 0)
    throw std::invalid_argument("C_{mu mu alpha} must vanish");
  store(C, {mu, nu, alpha}, v);
  if (mu != nu) store(C, {nu, mu, alpha}, -v);
}

void AlgebraSpec::set_k(int a, int nu, int b, const Rational& v) {
  check_range(a, 1, m, "K");
  check_range(nu, 1, n, "K");
  check_range(b, 1, m, "K");
  store(K, {a, nu, b}, v);
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(const AlgebraSpec& spec) {
  ValidationReport report;
  const int n = spec.n;
  const int m = spec.m;

  for (const auto& [key, v] : spec.C) {
    for (int i : key)
      if (i < 1 || i > n) {
        report.violations.push_back(
            Violation{"indexRange", {key[0], key[1], key[2]}, v});
        break;
      }
  }
  for (const auto& [key, v] : spec.K) {
    if (key[0] < 1 || key[0] > m || key[1] < 1 || key[1] > n || key[2] < 1 ||
        key[2] > m)
      report.violations.push_back(
          Violation{"indexRange", {key[0], key[1], key[2]}, v});
  }
  if (!report.ok()) return report;  // further checks assume sane indices

  // C_{mu nu alpha} + C_{nu mu alpha} = 0
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = mu; nu <= n; ++nu)
      for (int al = 1; al <= n; ++al) {
        const Rational r = spec.c(mu, nu, al) + spec.c(nu, mu, al);
        if (r != 0)
          report.violations.push_back(
              Violation{"antisymmetry", {mu, nu, al}, r});
      }

  // even Jacobi: cyclic sum over (mu, a, b) with free last index nu
  for (int mu = 1; mu <= n; ++mu)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int nu = 1; nu <= n; ++nu) {
          Rational r;
          for (int rho = 1; rho <= n; ++rho)
            r += spec.c(mu, a, rho) * spec.c(rho, b, nu) +
                 spec.c(a, b, rho) * spec.c(rho, mu, nu) +
                 spec.c(b, mu, rho) * spec.c(rho, a, nu);
          if (r != 0)
            report.violations.push_back(
                Violation{"evenJacobi", {mu, a, b, nu}, r});
        }

  // mixed Jacobi: K K antisymmetrized in (mu, nu) plus the C transport term
  for (int a = 1; a <= m; ++a)
    for (int mu = 1; mu <= n; ++mu)
      for (int nu = 1; nu <= n; ++nu)
        for (int c = 1; c <= m; ++c) {
          Rational r;
          for (int b = 1; b <= m; ++b)
            r += spec.k(a, nu, b) * spec.k(b, mu, c) -
                 spec.k(a, mu, b) * spec.k(b, nu, c);
          for (int rho = 1; rho <= n; ++rho)
            r += spec.c(mu, nu, rho) * spec.k(a, rho, c);
          if (r != 0)
            report.violations.push_back(
                Violation{"mixedJacobi", {a, mu, nu, c}, r});
        }

  return report;
}

std::string ValidationReport::str() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.family << " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i)
      os << (i ? "," : "") << v.indices[i];
    os << ") residual " << to_string(v.residual) << "\n";
  }
  return os.str();
}

nlohmann::ordered_json ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["valid"] = ok();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : violations)
    arr.push_back({{"family", v.family},
                   {"indices", v.indices},
                   {"residual", to_string(v.residual)}});
  j["violations"] = std::move(arr);
  return j;
}

// ---------------------------------------------------------------------------
// Flattening

Rational FlatStructure::ct(int A, int B, int J) const {
  return lookup(ctilde, {A, B, J});
}

FlatStructure flatten_unchecked(const AlgebraSpec& spec) {
  FlatStructure flat;
  flat.n = spec.n;
  flat.m = spec.m;
  for (const auto& [key, v] : spec.C) store(flat.ctilde, key, v);
  for (const auto& [key, v] : spec.K) {
    const auto [a, nu, b] = key;
    store(flat.ctilde, {nu, spec.n + a, spec.n + b}, -v);
    store(flat.ctilde, {spec.n + a, nu, spec.n + b}, v);
  }
  return flat;
}

FlatStructure flatten(const AlgebraSpec& spec) {
  const ValidationReport report = validate(spec);
  if (!report.ok())
    throw std::invalid_argument("cannot flatten invalid structure:\n" +
                                report.str());
  FlatStructure flat = flatten_unchecked(spec);
  if (!flat_jacobi_violations(flat).empty())
    throw std::logic_error(
        "flat Jacobi identity failed on a validated input (internal bug)");
  return flat;
}

std::vector<Violation> flat_jacobi_violations(const FlatStructure& flat) {
  std::vector<Violation> out;
  const int dim = flat.dim();
  for (int A = 1; A <= dim; ++A)
    for (int B = 1; B <= dim; ++B)
      for (int C = 1; C <= dim; ++C)
        for (int D = 1; D <= dim; ++D) {
          Rational r;
          for (int J = 1; J <= dim; ++J)
            r += flat.ct(A, B, J) * flat.ct(J, C, D) +
                 flat.ct(B, C, J) * flat.ct(J, A, D) +
                 flat.ct(C, A, J) * flat.ct(J, B, D);
          if (r != 0) out.push_back(Violation{"flatJacobi", {A, B, C, D}, r});
        }
  return out;
}

// ---------------------------------------------------------------------------
// File format

namespace {

Rational parse_coeff(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw std::invalid_argument("coefficient must be a \"p/q\" string or integer");
}

int parse_index(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number_integer())
    throw std::invalid_argument(what + " index must be an integer");
  return v.get<int>();
}

}  // namespace

AlgebraSpec parse_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed algebra file: ") +
                                e.what());
  }
  if (!j.is_object())
    throw std::invalid_argument("algebra file must be a JSON object");
  if (!j.contains("n") || !j.contains("m"))
    throw std::invalid_argument("algebra file needs integer fields n and m");

  AlgebraSpec spec;
  spec.n = parse_index(j.at("n"), "n");
  spec.m = parse_index(j.at("m"), "m");
  if (spec.n < 0 || spec.m < 0 || spec.n + spec.m < 1)
    throw std::invalid_argument("need n >= 0, m >= 0, n+m >= 1");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "m" && key != "C" && key != "K")
      throw std::invalid_argument("unknown field '" + key + "'");
    (void)value;
  }

  // raw C entries, duplicate and antisymmetry-conflict detection
  std::map<std::array<int, 3>, Rational> rawC;
  if (j.contains("C")) {
    if (!j.at("C").is_array())
      throw std::invalid_argument("C must be an array of entries");
    for (const auto& e : j.at("C")) {
      if (!e.is_array() || e.size() != 4)
        throw std::invalid_argument("C entry must be [mu, nu, alpha, coeff]");
      const int mu = parse_index(e.at(0), "C");
      const int nu = parse_index(e.at(1), "C");
      const int al = parse_index(e.at(2), "C");
      check_range(mu, 1, spec.n, "C");
      check_range(nu, 1, spec.n, "C");
      check_range(al, 1, spec.n, "C");
      const Rational v = parse_coeff(e.at(3));
      if (!rawC.try_emplace({mu, nu, al}, v).second)
        throw std::invalid_argument("duplicate C entry at (" +
                                    std::to_string(mu) + "," +
                                    std::to_string(nu) + "," +
                                    std::to_string(al) + ")");
    }
  }
  for (const auto& [key, v] : rawC) {
    const auto mirror = rawC.find({key[1], key[0], key[2]});
    if (mirror != rawC.end() && mirror->second != -v)
      throw std::invalid_argument(
          "antisymmetry conflict between C entries at (" +
          std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
          std::to_string(key[2]) + ") and its transpose");
    if (key[0] == key[1] && v != 0)
      throw std::invalid_argument("C_{mu mu alpha} must vanish");
  }
  for (const auto& [key, v] : rawC) spec.set_c(key[0], key[1], key[2], v);

  if (j.contains("K")) {
    if (!j.at("K").is_array())
      throw std::invalid_argument("K must be an array of entries");
    std::set<std::array<int, 3>> seen;
    for (const auto& e : j.at("K")) {
      if (!e.is_array() || e.size() != 4)
        throw std::invalid_argument("K entry must be [a, nu, b, coeff]");
      const int a = parse_index(e.at(0), "K");
      const int nu = parse_index(e.at(1), "K");
      const int b = parse_index(e.at(2), "K");
      check_range(a, 1, spec.m, "K");
      check_range(nu, 1, spec.n, "K");
      check_range(b, 1, spec.m, "K");
      if (!seen.insert({a, nu, b}).second)
        throw std::invalid_argument("duplicate K entry at (" +
                                    std::to_string(a) + "," +
                                    std::to_string(nu) + "," +
                                    std::to_string(b) + ")");
      spec.set_k(a, nu, b, parse_coeff(e.at(3)));
    }
  }
  return spec;
}

std::string render_spec(const AlgebraSpec& spec) {
  nlohmann::ordered_json j;
  j["n"] = spec.n;
  j["m"] = spec.m;
  auto carr = nlohmann::ordered_json::array();
  for (const auto& [key, v] : spec.C)
    if (key[0] < key[1])
      carr.push_back({key[0], key[1], key[2], to_string(v)});
  j["C"] = std::move(carr);
  auto karr = nlohmann::ordered_json::array();
  for (const auto& [key, v] : spec.K)
    karr.push_back({key[0], key[1], key[2], to_string(v)});
  j["K"] = std::move(karr);
  return j.dump(2) + "\n";
}

AlgebraSpec scaled(const AlgebraSpec& spec, const Rational& h) {
  AlgebraSpec out;
  out.n = spec.n;
  out.m = spec.m;
  for (const auto& [key, v] : spec.C) store(out.C, key, v * h);
  for (const auto& [key, v] : spec.K) store(out.K, key, v * h);
  return out;
}

// ---------------------------------------------------------------------------
// Corpus

AlgebraSpec abelian_spec(int n, int m) {
  AlgebraSpec s;
  s.n = n;
  s.m = m;
  return s;
}

AlgebraSpec solvable_2d_spec() {
  AlgebraSpec s = abelian_spec(2, 0);
  s.set_c(1, 2, 1, 1);
  return s;
}

AlgebraSpec heisenberg_spec() {
  AlgebraSpec s = abelian_spec(3, 0);
  s.set_c(1, 2, 3, 1);
  return s;
}

AlgebraSpec super_n1m1_spec() {
  AlgebraSpec s = abelian_spec(1, 1);
  s.set_k(1, 1, 1, 1);
  return s;
}

AlgebraSpec super_n2m1_spec() {
  AlgebraSpec s = abelian_spec(2, 1);
  s.set_c(1, 2, 1, 1);
  s.set_k(1, 2, 1, 1);
  return s;
}

AlgebraSpec random_valid_spec(std::mt19937_64& rng, int n, int m) {
  static const Rational pool[] = {Rational(0),     Rational(1),
                                  Rational(-1),    Rational(1, 2),
                                  Rational(-1, 2)};
  for (int attempt = 0; attempt < 500; ++attempt) {
    AlgebraSpec s = abelian_spec(n, m);
    for (int mu = 1; mu <= n; ++mu)
      for (int nu = mu + 1; nu <= n; ++nu)
        for (int al = 1; al <= n; ++al)
          if (rng() % 4 == 0) s.set_c(mu, nu, al, pool[rng() % 5]);
    for (int a = 1; a <= m; ++a)
      for (int nu = 1; nu <= n; ++nu)
        for (int b = 1; b <= m; ++b)
          if (rng() % 4 == 0) s.set_k(a, nu, b, pool[rng() % 5]);
    if (validate(s).ok()) return s;
  }
  return abelian_spec(n, m);
}

}  // namespace weylreal
