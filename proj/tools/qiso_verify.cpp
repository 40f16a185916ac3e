#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qiso/verify/run.hpp"

using namespace qiso::verify;

namespace {

void print_summary(const Report& report) {
  for (const auto& r : report.records)
    if (r.status != qiso::CheckStatus::pass)
      std::cerr << to_string(r.status) << "  " << r.check_id << "  residual=" << r.residual
                << (r.details.empty() ? "" : "  " + r.details) << '\n';
  std::cout << report.count(qiso::CheckStatus::pass) << " passed, " << report.count(qiso::CheckStatus::fail)
            << " failed, " << report.count(qiso::CheckStatus::skip) << " skipped\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify the free-product quantum isometry action on the Podles sphere spectral triple"};

  std::string config_file, grid_file, out_dir, rep;
  std::vector<std::string> suites;
  std::optional<double> mu, c, theta;
  std::optional<int> M, buffer, N;
  std::optional<std::uint64_t> seed;

  app.add_option("--config", config_file, "TOML (or .json) file with RunConfig keys")->check(CLI::ExistingFile);
  app.add_option("--mu", mu, "deformation parameter in (0,1)");
  app.add_option("--c", c, "sphere parameter, c > 0");
  app.add_option("--theta", theta, "character angle in turns");
  app.add_option("--M", M, "truncation size per leg (>= 4)");
  app.add_option("--buffer", buffer, "boundary buffer; interior is n <= M - buffer");
  app.add_option("--N", N, "quotient index for the quotient suite");
  app.add_option("--suite", suites, "suite to run (repeatable): words podles commutant action noncompact quotient "
                                    "volume, or all");
  app.add_option("--grid-file", grid_file, "grid file with lists mu, c, theta, M")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--rep", rep, "equivariant representation: default, trivial or violating");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    if (!config_file.empty()) cfg = config_from_json(load_config_file(config_file));
    if (mu) cfg.mu = *mu;
    if (c) cfg.c = *c;
    if (theta) cfg.theta = *theta;
    if (M) cfg.M = *M;
    if (buffer) cfg.buffer = *buffer;
    if (N) cfg.N_quotient = *N;
    if (seed) cfg.seed = *seed;
    if (!rep.empty()) cfg.rep = rep;
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    if (!suites.empty()) cfg = config_from_json({{"suites", suites}}, cfg);

    if (!grid_file.empty()) {
      const auto grid = grid_from_json(load_config_file(grid_file), cfg);
      const auto rows = run_grid(cfg, grid);
      std::filesystem::create_directories(cfg.output_dir);
      std::ofstream os(cfg.output_dir / "summary.csv");
      if (!os) throw std::runtime_error("cannot write summary.csv");
      write_summary_csv(os, rows);
      for (const auto& r : rows) {
        std::cout << "cell " << r.index << ": " << r.status;
        if (!r.error.empty()) std::cout << " (" << r.error << ")";
        std::cout << '\n';
      }
      return grid_exit_code(rows);
    }

    const auto report = run(cfg);
    print_summary(report);
    return report.exit_code();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
}
