#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jsplit_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace jsplit::cli;
  CLI::App app{"Exact computations with Jordan superalgebras Josp(n|2m), their bimodules and splittings"};
  app.require_subcommand(1);

  std::size_t n = 1;
  std::size_t m = 1;
  std::string realization = "table";
  std::string kind = "reg";
  std::string out;
  std::string idempotents;
  std::string input;
  std::string module_input;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  bool envelope = false;
  bool timing = false;
  std::string grid = "1,1;2,1;1,2";
  std::string kinds = "reg,skew,reg-op,skew-op";
  bool counterexample = false;

  auto* josp = app.add_subcommand("josp", "Build Josp(n|2m) and write it as algebra JSON");
  josp->add_option("--n", n, "Size of the orthogonal block (n >= 1)");
  josp->add_option("--m", m, "Half the size of the symplectic block");
  josp->add_option("--realization", realization, "table or matrix")->check(CLI::IsMember({"table", "matrix"}));
  josp->add_option("--out", out, "Output file (default: stdout)");

  auto* bimodule = app.add_subcommand("bimodule", "Build a bimodule over Josp(n|2m)");
  bimodule->add_option("--n", n, "Size of the orthogonal block");
  bimodule->add_option("--m", m, "Half the size of the symplectic block");
  bimodule->add_option("--kind", kind, "reg, skew, reg-op or skew-op")
      ->check(CLI::IsMember({"reg", "skew", "reg-op", "skew-op"}));
  bimodule->add_option("--out", out, "Output file (default: stdout)");

  auto* extend = app.add_subcommand("extend", "Split null extension of an algebra by a bimodule");
  extend->add_option("algebra", input, "Algebra JSON")->required();
  extend->add_option("module", module_input, "Bimodule JSON")->required();
  extend->add_option("--out", out, "Output file (default: stdout)");

  auto* check = app.add_subcommand("check", "Supercommutativity and super-Jordan identity verdict");
  check->add_option("file", input, "Algebra or extension JSON")->required();
  check->add_flag("--envelope", envelope, "Also check the Grassmann envelope on 4 generators");
  check->add_option("--jobs", jobs, "Worker threads for the identity scan");

  auto* peirce = app.add_subcommand("peirce", "Peirce decomposition relative to an idempotent family");
  peirce->add_option("file", input, "Algebra or extension JSON")->required();
  peirce->add_option("--idempotents", idempotents, "Comma-separated basis labels, e.g. h11,h22,v11")->required();

  auto* split = app.add_subcommand("split", "Solve the lifting system of a marked extension");
  split->add_option("file", input, "Extension JSON with model and section")->required();
  split->add_option("--seed", seed, "Perturb the section randomly before solving");

  auto* ce = app.add_subcommand("counterexample", "Build the non-splitting extension and certify it");
  ce->add_option("--out", out, "Also write the extension JSON here");
  ce->add_option("--jobs", jobs, "Worker threads for the identity scan");
  ce->add_flag("--timing", timing, "Include phase timings in the report");

  auto* suite = app.add_subcommand("suite", "Batch run over a grid of (n,m) and bimodule kinds");
  suite->add_option("--grid", grid, "Semicolon-separated n,m pairs");
  suite->add_option("--kinds", kinds, "Comma-separated bimodule kinds (may be empty)");
  suite->add_flag("--counterexample", counterexample, "Include the non-splitting example");
  suite->add_option("--jobs", jobs, "Worker threads for the identity scan");
  suite->add_flag("--timing", timing, "Include phase timings in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  const Streams io{std::cout, std::cerr};

  if (*josp) return run_josp(n, m, realization, out, io);
  if (*bimodule) return run_bimodule(n, m, kind, out, io);
  if (*extend) return run_extend(input, module_input, out, io);
  if (*check) return run_check(input, envelope, jobs, io);
  if (*peirce) return run_peirce(input, idempotents, io);
  if (*split) return run_split(input, seed, io);
  if (*ce) return run_counterexample(out, jobs, timing, io);
  try {
    SuiteOptions options{parse_grid(grid), parse_kinds(kinds), counterexample, jobs};
    return run_suite(options, timing, io);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}
