#include "qiso/verify/report.hpp"

#include <algorithm>
#include <cmath>

namespace qiso::verify {

Record to_record(const CheckResult& r, double runtime_ms) {
  return Record{r.id, r.statement, r.status, r.residual, r.details, r.kind, runtime_ms};
}

void Report::add(const std::vector<CheckResult>& checks, double runtime_ms) {
  for (const auto& c : checks) records.push_back(to_record(c, runtime_ms));
}

bool Report::any_failed(CheckKind kind) const {
  return std::any_of(records.begin(), records.end(),
                     [&](const Record& r) { return r.kind == kind && r.status == CheckStatus::fail; });
}

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const Record& r) { return r.status == s; }));
}

int Report::exit_code() const {
  if (any_failed(CheckKind::symbolic)) return kSymbolicFailure;
  if (any_failed(CheckKind::numeric)) return kNumericFailure;
  return kAllPass;
}

nlohmann::json Report::to_json(bool with_runtime) const {
  auto arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j{{"check_id", r.check_id},
                     {"paper_ref", r.paper_ref},
                     {"status", std::string(to_string(r.status))},
                     {"kind", std::string(to_string(r.kind))},
                     {"details", r.details}};
    // JSON has no NaN/inf; keep them visible as strings.
    if (std::isfinite(r.residual))
      j["residual"] = r.residual;
    else
      j["residual"] = std::isnan(r.residual) ? "nan" : "inf";
    if (with_runtime) j["runtime_ms"] = r.runtime_ms;
    arr.push_back(std::move(j));
  }
  return {{"records", std::move(arr)}};
}

}  // namespace qiso::verify
