#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "weylreal/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "weylreal: Weyl realizations of Lie (super)algebras inside a truncated "
      "Clifford-Weyl algebra, with exact rational verification"};
  app.require_subcommand(1);

  weylreal::RunConfig config;
  std::string input;
  int order = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("input", input, "algebra file (JSON)")->required();
    cmd->add_option("--order", order, "truncation / series order");
    cmd->add_option("--format", config.outputFormat,
                    "output format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--seed", seed,
                    "run seed, echoed into structured output");
  };

  add_common(app.add_subcommand("validate",
                                "check structure-constant identities"),
             true);
  auto* realize = app.add_subcommand(
      "realize", "construct and export the realization (verifies first)");
  add_common(realize, true);
  realize->add_flag("--force", config.force,
                    "emit even when verification fails");
  add_common(app.add_subcommand(
                 "verify", "verify relations and shift-operator commutators"),
             true);
  add_common(app.add_subcommand("series-checks",
                                "functional equation, ODE, odd-vanishing"),
             false);
  add_common(app.add_subcommand(
                 "bernoulli", "coefficient table in both sign conventions"),
             false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : weylreal::exit_code::usage;
  }

  auto* sub = app.get_subcommands().front();
  config.command = sub->get_name();
  if (!input.empty()) config.inputPath = input;
  if (sub->count("--order")) config.order = order;
  if (sub->count("--seed")) config.seed = seed;

  return weylreal::run(config, std::cout, std::cerr);
}
