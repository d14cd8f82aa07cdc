#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace sysrep;

int main(int argc, char** argv) {
  CLI::App app{"Linear dynamical systems over exact fields as representations of a time group"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  std::uint64_t seed = 0;
  cli::Options opt;
  std::string x0;
  std::int64_t steps = 10;
  std::string method = "analytic";
  std::string report;

  auto common = [&](CLI::App* sub) {
    sub->add_option("document", path, "System document (JSON)")->required();
    sub->add_flag("--json", json, "Emit canonical JSON");
    sub->add_option("--seed", seed, "Seed for randomized algorithms (overrides the document)");
  };
  auto census_flags = [&](CLI::App* sub) {
    sub->add_option("--max-states", opt.max_states, "Enumeration limit")->check(CLI::Range(std::uint64_t{1}, kHardMaxStates));
    sub->add_option("--workers", opt.workers, "Enumeration threads")->check(CLI::Range(1u, 64u));
  };

  auto* analyze = app.add_subcommand("analyze", "Run the full analysis");
  common(analyze);
  census_flags(analyze);
  analyze->add_option("--trials", opt.trials, "Homomorphism-check samples");

  auto* simulate = app.add_subcommand("simulate", "Print the trajectory x_t = A^t x0");
  common(simulate);
  simulate->add_option("--x0", x0, "Initial state, comma separated")->required();
  simulate->add_option("--steps", steps, "Last time step (negative runs backwards)");

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  common(verify);
  census_flags(verify);
  verify->add_option("--trials", opt.trials, "Samples per randomized suite");
  verify->add_option("--report", report, "Stored analyze --json report to compare against");

  auto* factors = app.add_subcommand("factors", "Minimal and characteristic polynomials with factorizations");
  common(factors);

  auto* decompose = app.add_subcommand("decompose", "Primary components and invariant factors");
  common(decompose);

  auto* orbits = app.add_subcommand("orbits", "Orbit census");
  common(orbits);
  census_flags(orbits);
  orbits->add_option("--method", method, "analytic, enumerate or both")
      ->check(CLI::IsMember({"analytic", "enumerate", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const io::SystemDocument doc = cli::load_document(path);
    for (const CLI::App* sub : app.get_subcommands()) {
      if (sub->count("--seed")) opt.seed = seed;
    }
    cli::Output out;
    if (*analyze) {
      out = cli::analyze(doc, opt);
    } else if (*simulate) {
      out = cli::simulate(doc, x0, steps);
    } else if (*verify) {
      out = cli::verify(doc, opt, report.empty() ? std::nullopt : std::optional<std::string>(report));
    } else if (*factors) {
      out = cli::factors(doc, opt);
    } else if (*decompose) {
      out = cli::decompose(doc, opt);
    } else {
      const auto m = method == "enumerate" ? cli::CensusMethod::Enumerate
                     : method == "both"    ? cli::CensusMethod::Both
                                           : cli::CensusMethod::Analytic;
      out = cli::orbits(doc, opt, m);
    }
    std::cout << (json ? io::canonical(out.json) + "\n" : out.text);
    return out.status;
  } catch (const Error& e) {
    std::cerr << "sysrep: " << e.what() << "\n";
    return cli::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "sysrep: Internal: " << e.what() << "\n";
    return 1;
  }
}
