#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qiso/check.hpp"

namespace qiso::verify {

enum ExitCode : int { kAllPass = 0, kNumericFailure = 1, kSymbolicFailure = 2, kConfigError = 3 };

struct Record {
  std::string check_id;
  std::string paper_ref;  // the statement checked
  CheckStatus status = CheckStatus::pass;
  double residual = 0.0;
  std::string details;
  CheckKind kind = CheckKind::numeric;
  double runtime_ms = 0.0;
};

Record to_record(const CheckResult& r, double runtime_ms);

struct Report {
  std::vector<Record> records;

  void add(const std::vector<CheckResult>& checks, double runtime_ms);
  bool any_failed(CheckKind kind) const;
  bool any_failed() const { return any_failed(CheckKind::numeric) || any_failed(CheckKind::symbolic); }
  std::size_t count(CheckStatus s) const;
  /// 2 if a symbolic check failed, else 1 if a numeric one did, else 0.
  int exit_code() const;
  /// `{"records": [...]}`; runtime_ms is omitted when `with_runtime` is false.
  nlohmann::json to_json(bool with_runtime = true) const;
};

}  // namespace qiso::verify
