#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace weylreal {

namespace exit_code {
constexpr int ok = 0;
constexpr int usage = 2;
constexpr int parse_error = 3;
constexpr int validation_failure = 4;
constexpr int verification_failure = 5;
constexpr int internal_error = 7;
}  // namespace exit_code

struct RunConfig {
  std::string command;  // validate | realize | verify | series-checks | bernoulli
  std::optional<std::string> inputPath;
  std::optional<int> order;  // per-command default when unset (4 for algebra
                             // commands; series-checks uses per-check defaults)
  std::string outputFormat = "text";  // text | structured
  std::optional<std::uint64_t> seed;  // echoed into structured output
  bool force = false;  // realize: emit even when verification fails
};

/// Executes one command; reports to `out` (results) and `err`
/// (diagnostics). Returns an exit_code value. Identical inputs produce
/// byte-identical output.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// FNV-1a 64-bit digest, rendered as 16 hex digits; used to fingerprint
/// input files in realization exports.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace weylreal
