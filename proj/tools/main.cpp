#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli/suites.hpp"

int main(int argc, char** argv) {
  using rieszkit::cli::Config;
  Config config;
  std::optional<std::size_t> grid;
  std::optional<double> tol;
  std::optional<double> bound;
  std::optional<double> p;
  std::optional<std::size_t> stage;

  std::string names;
  for (const auto& s : rieszkit::cli::suite_names()) names += (names.empty() ? "" : ", ") + s;

  CLI::App app{"rieszkit: decomposition and inequality checks for analytic measures on tori"};
  app.add_option("suite", config.suite, "One of: " + names)->required();
  app.add_option("--input", config.input, "JSON file, JSON array file or directory of JSON files");
  app.add_option("--order", config.order, "Order JSON (default: lexicographic)");
  app.add_option("--out", config.out, "Report directory")->required();
  app.add_option("--grid", grid, "Nodes per axis for pointwise checks (default by dimension)");
  app.add_option("--seed", config.seed, "Random seed (default 0)");
  app.add_option("--tol", tol, "Quadrature relative tolerance (default RIESZKIT_TOL or 1e-6)");
  app.add_option("--jobs", config.jobs, "Parallel workers (default 1)")->check(CLI::PositiveNumber);
  app.add_option("--bound", bound, "Asserted upper bound on ratios");
  app.add_option("--p", p, "Exponent: 0.5, 1 or 2 (default all)");
  app.add_option("--stage", stage, "Chain stage j");
  app.add_option("--nu", config.nu, "Measure on the target torus (transfer)");
  app.add_option("--hom", config.hom, "Homomorphism JSON (transfer, pushforward)");
  app.add_option("--corpus", config.input, "Alias of --input for transfer");
  app.add_option("--radius", config.radius, "Window radius (axioms, default 4)");
  app.add_option("--n", config.n, "Number of generated objects (corpus-gen, default 10)");
  app.add_option("--dim", config.dim, "Dimension when no --order is given (corpus-gen, default 2)");
  app.add_flag("--analytic", config.analytic, "Generate analytic objects (corpus-gen)");
  app.add_option("--kind", config.kind, "measures or polys (corpus-gen)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rieszkit::cli::kExitParse;
  }
  config.grid = grid;
  config.tol = tol;
  config.bound = bound;
  config.p = p;
  config.stage = stage;

  try {
    return rieszkit::cli::run(config, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return rieszkit::cli::kExitParse;
  }
}
