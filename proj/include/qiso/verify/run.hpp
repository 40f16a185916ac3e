#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qiso/podles/truncation.hpp"
#include "qiso/verify/config_io.hpp"
#include "qiso/verify/report.hpp"

namespace qiso::verify {

/// Suites in execution order.
inline const std::vector<std::string> kSuiteOrder = {"words",      "podles",   "commutant", "action",
                                                     "noncompact", "quotient", "volume"};

struct RunConfig {
  double mu = 0.5;
  double c = 2.0;
  double theta = 0.25;
  int M = 32;
  int buffer = 2;
  int N_quotient = 1;
  std::vector<std::string> suites;
  std::filesystem::path output_dir = ".";
  std::uint64_t seed = 0x5eed;
  std::string rep = "default";  // default | trivial | violating

  podles::TruncationConfig truncation() const { return {M, mu, c, buffer}; }
  /// Throws ConfigError; called before any computation.
  void validate() const;
};

/// Overlays the keys present in `j` onto `base`. Unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});

/// Runs the selected suites in dependency order and returns the report. A
/// symbolic failure in `words` or `action` skips the suites built on them.
Report run_suites(const RunConfig& cfg);

/// run_suites, then writes report.json (and tail_norms.csv when the
/// noncompact suite ran) into cfg.output_dir.
Report run(const RunConfig& cfg);

struct GridSpec {
  std::vector<double> mu;
  std::vector<double> c;
  std::vector<double> theta;
  std::vector<int> M;
};

/// Reads the axes `mu`, `c`, `theta`, `M` (arrays or scalars); missing axes
/// default to the template's value. Any other key is a RunConfig field and is
/// overlaid onto `tmpl`.
GridSpec grid_from_json(const nlohmann::json& j, RunConfig& tmpl);

struct GridRow {
  int index = 0;
  double mu = 0.0, c = 0.0, theta = 0.0;
  int M = 0;
  std::string status;  // pass | fail | config-invalid
  std::size_t passed = 0, failed = 0, skipped = 0;
  double podles_max_residual = 0.0;
  double noncompact_tail_norm = 0.0;
  std::string noncompact_status;  // pass | fail | degenerate | not-run
  int exit_code = 0;
  std::string error;
};

/// Cartesian product mu x c x theta x M (mu outermost). Each cell writes its
/// artifacts under <out>/cell_<index>; summary.csv goes to <out>.
std::vector<GridRow> run_grid(const RunConfig& tmpl, const GridSpec& grid);
void write_summary_csv(std::ostream& os, const std::vector<GridRow>& rows);
/// 3 if any cell was config-invalid, else the worst cell exit code.
int grid_exit_code(const std::vector<GridRow>& rows);

}  // namespace qiso::verify
