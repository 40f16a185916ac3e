#pragma once

#include <string>
#include <string_view>

namespace qiso {

enum class CheckKind { symbolic, numeric };
enum class CheckStatus { pass, fail, skip };

/// Outcome of one verification. `statement` names the identity under test,
/// `residual` is the measured deviation (0 for exact word-level matches).
struct CheckResult {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::pass;
  double residual = 0.0;
  std::string details;
  CheckKind kind = CheckKind::numeric;

  bool passed() const { return status == CheckStatus::pass; }
  bool failed() const { return status == CheckStatus::fail; }
};

inline CheckResult make_check(std::string id, std::string statement, double residual, double tol,
                              CheckKind kind, std::string details = {}) {
  CheckResult r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.residual = residual;
  r.status = residual <= tol ? CheckStatus::pass : CheckStatus::fail;
  r.kind = kind;
  r.details = std::move(details);
  return r;
}

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "unknown";
}

inline std::string_view to_string(CheckKind k) {
  return k == CheckKind::symbolic ? "symbolic" : "numeric";
}

}  // namespace qiso
