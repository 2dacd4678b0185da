#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sigma/limits.hpp"
#include "sigma/raag.hpp"
#include "sigma/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Decision engine for Sigma-invariants of graph groups"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string char_path;
  int n = 1;
  bool homotopical = false;
  sigma::Limits limits;
  std::uint64_t seed = 0;
  bool quick = false;
  bool inject_fault = false;
  int support_count = 0;

  const auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--max-simplices", limits.max_simplices,
                    "Abort when a complex would exceed this many simplices");
    cmd->add_option("--tietze-budget", limits.tietze_budget,
                    "Elimination budget for the fundamental-group search");
  };

  auto* fpn = app.add_subcommand(
      "fpn", "Finiteness type FP_n / F_n of the kernel group of a graph");
  fpn->add_option("--graph", graph_path, "Graph document (JSON)")->required();
  fpn->add_option("--n", n, "Finiteness length to test")->required();
  fpn->add_flag("--homotopical", homotopical, "Test F_n instead of FP_n");
  add_limits(fpn);

  auto* raag = app.add_subcommand(
      "raag", "Sigma^n membership for a character of the graph group");
  raag->add_option("--graph", graph_path, "Graph document (JSON)")->required();
  raag->add_option("--char", char_path, "Character document (JSON)")->required();
  raag->add_option("--n", n, "Invariant degree")->required();
  raag->add_flag("--homotopical", homotopical,
                 "Homotopical variant (connectivity instead of acyclicity)");
  add_limits(raag);

  auto* bb = app.add_subcommand(
      "bb", "Sigma^n membership for a character of the kernel group");
  bb->add_option("--graph", graph_path, "Graph document (JSON)")->required();
  bb->add_option("--char", char_path, "Character document (JSON)")->required();
  bb->add_option("--n", n, "Invariant degree")->required();
  bb->add_flag("--homotopical", homotopical,
               "Homotopical variant (connectivity instead of acyclicity)");
  add_limits(bb);

  auto* poly = app.add_subcommand(
      "poly", "Sigma^1 complement of the kernel group as equality systems");
  poly->add_option("--graph", graph_path, "Graph document (JSON)")->required();
  poly->add_option("--bad-set-cap", limits.bad_set_vertex_cap,
                   "Largest vertex count accepted for the subset scan");

  auto* wreath = app.add_subcommand(
      "wreath", "Sufficient membership test from the support count alone");
  wreath->add_option("--n", n, "Invariant degree")->required();
  wreath->add_option("--support", support_count,
                     "Number of coordinate subgroups with nonzero restriction")
      ->required();

  auto* selftest = app.add_subcommand(
      "selftest", "Cross-validation suites over generated inputs");
  selftest->add_option("--seed", seed, "Base seed for the generated inputs");
  selftest->add_flag("--quick", quick, "Smaller sample sizes");
  selftest->add_flag("--inject-fault", inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sigma::kExitInvalid;
  }

  const sigma::Variant variant =
      homotopical ? sigma::Variant::homotopical : sigma::Variant::homological;
  sigma::CommandOutcome outcome;
  if (fpn->parsed()) {
    outcome = sigma::run_fpn(graph_path, n, variant, limits);
  } else if (raag->parsed()) {
    outcome = sigma::run_raag(graph_path, char_path, n, variant, limits);
  } else if (bb->parsed()) {
    outcome = sigma::run_bb(graph_path, char_path, n, variant, limits);
  } else if (poly->parsed()) {
    outcome = sigma::run_poly(graph_path, limits);
  } else if (wreath->parsed()) {
    outcome = sigma::run_wreath(n, support_count);
  } else {
    outcome = sigma::run_selftest(seed, quick, inject_fault);
  }
  std::cout << sigma::report_to_string(outcome.report);
  return outcome.exit_code;
}
