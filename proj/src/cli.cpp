#include "weylreal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "weylreal/realize.hpp"
#include "weylreal/series.hpp"
#include "weylreal/structure.hpp"
#include "weylreal/verify.hpp"

namespace weylreal {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4)
    os << ((h >> shift) & 0xF);
  return os.str();
}

namespace {

struct Input {
  std::string path;
  std::string text;
  AlgebraSpec spec;
};

Input load_spec(const RunConfig& config) {
  if (!config.inputPath)
    throw std::invalid_argument("this command requires an input file");
  std::ifstream in(*config.inputPath, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read input file: " + *config.inputPath);
  std::ostringstream buf;
  buf << in.rdbuf();
  Input result;
  result.path = *config.inputPath;
  result.text = buf.str();
  result.spec = parse_spec(result.text);
  return result;
}

bool structured(const RunConfig& config) {
  return config.outputFormat == "structured";
}

void emit(std::ostream& out, nlohmann::ordered_json j,
          const RunConfig& config) {
  if (config.seed) j["seed"] = *config.seed;
  out << j.dump(2) << "\n";
}

int run_validate(const RunConfig& config, std::ostream& out) {
  const Input in = load_spec(config);
  const ValidationReport report = validate(in.spec);
  if (structured(config)) {
    nlohmann::ordered_json j;
    j["command"] = "validate";
    j["input"] = in.path;
    j["report"] = report.to_json();
    emit(out, std::move(j), config);
  } else {
    out << report.str() << (report.ok() ? "\n" : "");
  }
  return report.ok() ? exit_code::ok : exit_code::validation_failure;
}

int run_realize(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  const int N = config.order.value_or(4);
  if (N < 2) {
    err << "realize needs --order >= 2 so the result can be verified\n";
    return exit_code::usage;
  }
  const Input in = load_spec(config);
  const ValidationReport vr = validate(in.spec);
  if (!vr.ok()) {
    err << "input structure is invalid:\n" << vr.str();
    return exit_code::validation_failure;
  }
  const FlatStructure flat = flatten(in.spec);
  const Realization R = realization(flat, N);
  const DefectReport rel = verify_relations(flat, R);
  const bool verified = rel.ok() && verify_classical_limit(R);
  if (!verified && !config.force) {
    err << "refusing to emit an unverified realization (--force overrides)\n"
        << rel.str();
    return exit_code::verification_failure;
  }

  const std::string digest = fnv1a_hex(in.text);
  if (structured(config)) {
    nlohmann::ordered_json j;
    j["command"] = "realize";
    j["input"] = in.path;
    j["digest"] = digest;
    j["order"] = N;
    j["verified"] = verified;
    j["realization"] = R.to_json();
    emit(out, std::move(j), config);
  } else {
    out << "# order " << N << ", n " << flat.n << ", m " << flat.m
        << ", digest " << digest << ", verified "
        << (verified ? "yes" : "NO") << "\n"
        << R.str();
  }
  return verified ? exit_code::ok : exit_code::verification_failure;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const int N = config.order.value_or(4);
  if (N < 2) {
    err << "verify needs --order >= 2\n";
    return exit_code::usage;
  }
  const Input in = load_spec(config);
  const ValidationReport vr = validate(in.spec);
  if (!vr.ok()) {
    err << "input structure is invalid:\n" << vr.str();
    return exit_code::validation_failure;
  }
  const FlatStructure flat = flatten(in.spec);
  const Realization R = realization(flat, N);
  const DefectReport rel = verify_relations(flat, R);
  const bool classical = verify_classical_limit(R);
  const DefectReport shift = verify_shift_commutators(flat, R);
  const bool ok = rel.ok() && classical && shift.ok();

  if (structured(config)) {
    nlohmann::ordered_json j;
    j["command"] = "verify";
    j["input"] = in.path;
    j["order"] = N;
    j["ok"] = ok;
    j["relations"] = rel.to_json();
    j["classicalLimit"] = classical;
    j["shiftCommutators"] = shift.to_json();
    emit(out, std::move(j), config);
  } else {
    out << "relations: " << rel.str();
    out << "classical-limit: " << (classical ? "ok" : "FAILED") << "\n";
    out << "shift-commutators: " << shift.str();
  }
  return ok ? exit_code::ok : exit_code::verification_failure;
}

int run_series_checks(const RunConfig& config, std::ostream& out) {
  struct Check {
    std::string name;
    int order;
    bool ok;
  };
  const int o = config.order.value_or(0);
  std::vector<Check> checks;
  {
    const int N = o > 0 ? o : 8;
    checks.push_back({"functional-equation", N,
                      check_functional_equation(N).holds});
  }
  {
    const int N = o > 0 ? o : 8;
    checks.push_back({"g-multiplicative", N, check_g_multiplicative(N)});
  }
  {
    // the ODE residual needs at least two coefficients
    const int N = o > 0 ? std::max(o, 2) : 12;
    checks.push_back({"ode", N, check_ode(N)});
  }
  {
    const int N = o > 0 ? o : 15;
    checks.push_back({"odd-vanishing", N, check_odd_vanishing(N)});
  }

  bool all = true;
  for (const auto& c : checks) all = all && c.ok;

  if (structured(config)) {
    nlohmann::ordered_json j;
    j["command"] = "series-checks";
    j["ok"] = all;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      arr.push_back({{"name", c.name}, {"order", c.order}, {"ok", c.ok}});
    j["checks"] = std::move(arr);
    emit(out, std::move(j), config);
  } else {
    for (const auto& c : checks)
      out << c.name << " (order " << c.order << "): "
          << (c.ok ? "ok" : "FAILED") << "\n";
  }
  return all ? exit_code::ok : exit_code::verification_failure;
}

int run_bernoulli(const RunConfig& config, std::ostream& out) {
  const int N = config.order.value_or(4);
  const SeriesFn b = bernoulli_coeffs(N);
  const auto Bp = bernoulli_numbers_plus(N);
  const auto Bm = bernoulli_numbers_minus(N);

  if (structured(config)) {
    nlohmann::ordered_json j;
    j["command"] = "bernoulli";
    j["order"] = N;
    auto bs = nlohmann::ordered_json::array();
    auto plus = nlohmann::ordered_json::array();
    auto minus = nlohmann::ordered_json::array();
    for (int k = 0; k <= N; ++k) {
      bs.push_back(to_string(b[k]));
      plus.push_back(to_string(Bp[k]));
      minus.push_back(to_string(Bm[k]));
    }
    j["b"] = std::move(bs);
    j["BernoulliPlusHalf"] = std::move(plus);
    j["BernoulliMinusHalf"] = std::move(minus);
    emit(out, std::move(j), config);
  } else {
    out << "k  b_k  B_k(B1=+1/2)  B_k(B1=-1/2)\n";
    for (int k = 0; k <= N; ++k)
      out << k << "  " << to_string(b[k]) << "  " << to_string(Bp[k]) << "  "
          << to_string(Bm[k]) << "\n";
  }
  return exit_code::ok;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.outputFormat != "text" && config.outputFormat != "structured") {
      err << "unknown output format '" << config.outputFormat << "'\n";
      return exit_code::usage;
    }
    if (config.order && *config.order < 1) {
      err << "--order must be >= 1\n";
      return exit_code::usage;
    }
    const bool needsInput = config.command == "validate" ||
                            config.command == "realize" ||
                            config.command == "verify";
    if (needsInput && !config.inputPath) {
      err << config.command << " requires an input file\n";
      return exit_code::usage;
    }
    if (config.command == "validate") return run_validate(config, out);
    if (config.command == "realize") return run_realize(config, out, err);
    if (config.command == "verify") return run_verify(config, out, err);
    if (config.command == "series-checks")
      return run_series_checks(config, out);
    if (config.command == "bernoulli") return run_bernoulli(config, out);
    err << "unknown command '" << config.command << "'\n";
    return exit_code::usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal_error;
  }
}

}  // namespace weylreal
