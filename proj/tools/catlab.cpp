// catlab ring <SPEC> [--p P --q Q] <pairs|report|verify|classify-galois> [options]

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "catlab/cli.hpp"

int main(int argc, char** argv) {
  using namespace catlab::cli;
  RunConfig cfg;
  std::string p, q;

  CLI::App app{"Exact checks for cat-groups of quadratic algebras over finite rings"};
  app.require_subcommand(1);
  auto* ring = app.add_subcommand("ring", "work over the ring <SPEC>, e.g. \"Z/4\" or \"Z/2[x]/(x^2+x+1)\"");
  ring->require_subcommand(1);
  ring->fallthrough();
  ring->add_option("spec", cfg.ring, "ring spec: Z/n or Z/n[x]/(monic poly), joined by ' x '")->required();
  ring->add_option("--p", p, "p as an integer or an element label");
  ring->add_option("--q", q, "q as an integer or an element label");
  ring->add_flag("--json", cfg.json, "machine-readable output");
  ring->add_option("--max-size", cfg.max_size, "largest ring accepted (default 64)");
  ring->add_option("--galois-max-size", cfg.galois_max_size,
                   "largest ring for classification and cotensor checks (default 8)");
  ring->add_option("--jobs", cfg.jobs, "pairs checked in parallel")->check(CLI::PositiveNumber);
  ring->add_flag("--timing", cfg.timing, "report wall-clock time per pair");

  auto* pairs = ring->add_subcommand("pairs", "list the admissible pairs (p, q)");
  auto* report = ring->add_subcommand("report", "group table for each pair");
  auto* verify = ring->add_subcommand("verify", "run the check suites");
  auto* classify = ring->add_subcommand("classify-galois", "classify free rank-2 Galois algebras");
  for (auto* s : {pairs, report, verify, classify}) s->fallthrough();
  std::map<std::string, Suite> suites{
      {"free", Suite::free}, {"galois", Suite::galois}, {"stack", Suite::stack}, {"all", Suite::all}};
  verify->add_option("--suite", cfg.suite, "free | galois | stack | all (default all)")
      ->transform(CLI::CheckedTransformer(suites, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }
  if (ring->count("--p")) cfg.p = p;
  if (ring->count("--q")) cfg.q = q;
  if (*pairs) cfg.command = Command::pairs;
  else if (*report) cfg.command = Command::report;
  else if (*verify) cfg.command = Command::verify;
  else cfg.command = Command::classify;

  RunResult r = run(cfg);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
