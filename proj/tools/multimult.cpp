#include <iostream>

#include <CLI11.hpp>

#include "multimult/cli.hpp"

using namespace multimult;

int main(int argc, char** argv) {
  CLI::App app{"Mixed multiplicities of multigraded modules and of ideals"};
  app.require_subcommand(1);

  std::string input;
  bool json = false;
  std::string type, degree;
  CommandFlags flags;
  std::uint64_t seed = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", input, "input file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", json, "print the JSON report");
    sub->add_option("--seed", seed, "seed for randomized choices (default: the file's seed)");
  };

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial and top-degree coefficients");
  common(hilbert);

  auto* mixed = app.add_subcommand("mixed", "e(M;k) by one or all routes");
  common(mixed);
  mixed->add_option("--type", type, "k1,...,kd")->required();
  mixed->add_option("--method", flags.method, "delta|filter|chi|symbol|all")
      ->check(CLI::IsMember({"delta", "filter", "chi", "symbol", "all"}));
  mixed->add_option("--sequence", flags.sequence, "witness for chi and symbol");

  auto* koszul = app.add_subcommand("koszul", "Koszul complex slice tables");
  common(koszul);
  koszul->add_option("--sequence", flags.sequence, "elements, comma separated")->required();
  koszul->add_option("--degree", degree, "n1,...,nd");
  koszul->add_flag("--stabilize", flags.stabilize, "also compute the stabilized Euler characteristic");

  auto* check = app.add_subcommand("sequence-check", "filter-regularity and system status of a sequence");
  common(check);
  check->add_option("--sequence", flags.sequence, "elements, comma separated")->required();

  auto* ideal = app.add_subcommand("ideal", "mixed multiplicities of ideals via the associated module");
  common(ideal);
  ideal->add_option("--k0", flags.k0, "power index of J")->required();
  ideal->add_option("--type", type, "k1,...,kd")->required();
  ideal->add_option("--sequence", flags.sequence, "monomials, slot order: k0 for J, then k1 for I1, ...");
  ideal->add_flag("--verify", flags.verify, "run the section checks on a weak-(FC) sequence");

  auto* verify = app.add_subcommand("verify", "cross-route verification suite");
  common(verify);

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  CommandOutcome outcome;
  try {
    const InputDocument doc = parse_file(input);
    if (!type.empty()) flags.type = parse_multidegree(type);
    if (!degree.empty()) flags.degree = parse_multidegree(degree);
    if (app.get_subcommands().front()->count("--seed")) flags.seed = seed;
    outcome = run_command(command, doc, flags);
  } catch (const Error& e) {
    outcome = error_outcome(command, e);
  }
  if (json) {
    std::cout << outcome.report.dump(2) << "\n";
  } else {
    std::cout << render_text(outcome.report);
  }
  return outcome.exit_code;
}
