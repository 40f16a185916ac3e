#include "qiso/verify/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "qiso/action/identities.hpp"
#include "qiso/action/quotient.hpp"
#include "qiso/action/witness.hpp"
#include "qiso/freeprod/character.hpp"
#include "qiso/freeprod/random.hpp"
#include "qiso/podles/commutant.hpp"
#include "qiso/podles/operators.hpp"

namespace qiso::verify {

using nlohmann::json;
namespace fs = std::filesystem;

void RunConfig::validate() const {
  truncation().validate();
  if (!std::isfinite(theta)) throw ConfigError("theta must be finite");
  if (N_quotient < 1) throw ConfigError("N_quotient must be >= 1");
  if (N_quotient > M - 3) throw ConfigError("N_quotient must be <= M - 3");
  if (suites.empty()) throw ConfigError("empty suite list: select at least one suite");
  for (const auto& s : suites)
    if (std::find(kSuiteOrder.begin(), kSuiteOrder.end(), s) == kSuiteOrder.end())
      throw ConfigError("unknown suite '" + s + "'");
  if (rep != "default" && rep != "trivial" && rep != "violating")
    throw ConfigError("rep must be one of default, trivial, violating");
  if (rep == "violating" && M < 4) throw ConfigError("violating rep needs M >= 4");
}

namespace {

double get_real(const json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError("'" + key + "' must be a number");
  return j.get<double>();
}

int get_int(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < -1'000'000 || v > 1'000'000) throw ConfigError("'" + key + "' out of range");
  return static_cast<int>(v);
}

std::vector<std::string> get_suites(const json& j) {
  std::vector<std::string> out;
  const auto push = [&](const json& v) {
    if (!v.is_string()) throw ConfigError("'suites' entries must be strings");
    const auto s = v.get<std::string>();
    if (s == "all")
      out.insert(out.end(), kSuiteOrder.begin(), kSuiteOrder.end());
    else
      out.push_back(s);
  };
  if (j.is_array())
    for (const auto& v : j) push(v);
  else
    push(j);
  return out;
}

}  // namespace

RunConfig config_from_json(const json& j, RunConfig base) {
  if (!j.is_object()) throw ConfigError("config must be a table of key = value pairs");
  for (const auto& [key, v] : j.items()) {
    if (key == "mu") base.mu = get_real(v, key);
    else if (key == "c") base.c = get_real(v, key);
    else if (key == "theta") base.theta = get_real(v, key);
    else if (key == "M") base.M = get_int(v, key);
    else if (key == "buffer") base.buffer = get_int(v, key);
    else if (key == "N_quotient" || key == "N") base.N_quotient = get_int(v, key);
    else if (key == "suites") base.suites = get_suites(v);
    else if (key == "output_dir") {
      if (!v.is_string()) throw ConfigError("'output_dir' must be a string");
      base.output_dir = v.get<std::string>();
    } else if (key == "seed") {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw ConfigError("'seed' must be a non-negative integer");
      base.seed = v.get<std::uint64_t>();
    } else if (key == "rep") {
      if (!v.is_string()) throw ConfigError("'rep' must be a string");
      base.rep = v.get<std::string>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return base;
}

namespace {

using Clock = std::chrono::steady_clock;
using action::EquivariantRep;

struct Outcome {
  Report report;
  std::optional<podles::CompactnessProfile> tail;
  bool degenerate = false;
};

template <class F>
void timed(Report& report, F&& f) {
  const auto t0 = Clock::now();
  std::vector<CheckResult> checks = f();
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  report.add(checks, ms);
}

EquivariantRep make_rep(const RunConfig& cfg) {
  if (cfg.rep == "trivial") return action::trivial_rep(cfg.M);
  if (cfg.rep == "violating") return action::violating_rep(cfg.M, 3);
  return action::default_rep(cfg.M);
}

CheckResult count_check(std::string id, std::string statement, int mismatches, int trials) {
  return make_check(std::move(id), std::move(statement), mismatches, 0.0, CheckKind::symbolic,
                    std::to_string(mismatches) + " of " + std::to_string(trials) + " samples differ");
}

std::vector<CheckResult> words_suite(const RunConfig& cfg) {
  using namespace freeprod;
  std::mt19937_64 rng(cfg.seed);
  constexpr int kTrials = 200;
  int assoc = 0, inverse = 0, roundtrip = 0;
  for (int t = 0; t < kTrials; ++t) {
    const auto a = random_word(rng, 12, 8);
    const auto b = random_word(rng, 12, 8);
    const auto c = random_word(rng, 12, 8);
    assoc += ((a * b) * c != a * (b * c));
    inverse += !(a * a.inverse()).is_identity();
    roundtrip += (parse_word(to_string(a)) != a);
  }
  double star = 0.0, chi = 0.0;
  const auto phi = make_phi(cfg.theta);
  for (int t = 0; t < kTrials; ++t) {
    const auto a = random_element(rng, 4, 6, 6);
    const auto b = random_element(rng, 4, 6, 6);
    star = std::max(star, distance((a * b).star(), b.star() * a.star()));
    chi = std::max(chi, std::abs(phi.evaluate(a * b) - phi.evaluate(a) * phi.evaluate(b)));
  }
  std::vector<CheckResult> out{
      count_check("words.associativity", "(ab)c = a(bc) for reduced words", assoc, kTrials),
      count_check("words.inverse", "w w^{-1} = e", inverse, kTrials),
      count_check("words.roundtrip", "parse(to_string(w)) = w", roundtrip, kTrials),
      make_check("words.star_antihomomorphism", "(ab)* = b* a*", star, action::kSymbolicTolerance,
                 CheckKind::symbolic),
      make_check("words.character_multiplicative", "phi(ab) = phi(a) phi(b)", chi, 1e-12, CheckKind::numeric),
  };
  for (auto& r : action::summarize(action::r_identity_instances(cfg.M), "words.r_identity")) out.push_back(r);
  return out;
}

std::vector<CheckResult> podles_suite(const RunConfig& cfg) {
  const auto tc = cfg.truncation();
  const auto pi = podles::build_pi(tc);
  auto out = podles::verify_podles_relations(pi.A, pi.B, tc);
  out.push_back(make_check("podles.polar", "B = tau |B|", podles::polar_residual(pi.B, podles::build_tau(tc), tc),
                           1e-12, CheckKind::numeric));
  return out;
}

std::vector<CheckResult> commutant_suite(const RunConfig& cfg) {
  const auto tc = cfg.truncation();
  const auto pi = podles::build_pi(tc);
  const std::vector<podles::BlockOperator> gens{pi.A, pi.B, pi.B.adjoint()};
  podles::CommutantOptions opts;
  opts.seed = cfg.seed;
  const auto res = podles::commutant(gens, opts);
  std::ostringstream os;
  os << "dimension " << res.dimension << " via " << res.route << " route; null sigma " << res.largest_null_sigma
     << ", smallest retained sigma " << res.smallest_retained_sigma << " (sigma_max " << res.sigma_max << ")";
  return {make_check("commutant.dimension", "commutant of pi(A), pi(B), pi(B*) is C P+ + C P-",
                     std::abs(static_cast<double>(res.dimension) - 2.0), 0.0, CheckKind::numeric, os.str())};
}

std::vector<CheckResult> action_suite(const RunConfig& cfg, const EquivariantRep& rep) {
  const auto tc = cfg.truncation();
  const auto U = action::build_U(rep, tc);
  std::vector<CheckResult> out;
  const auto append = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
  append(action::verify_unitarity(U));
  out.push_back(action::verify_commutes_with_dirac(U, podles::build_dirac(tc).D));
  append(action::verify_corepresentation(U, rep));
  append(action::verify_q_relations(rep, tc));
  append(action::verify_proposition_generators(rep, tc));
  out.push_back(action::verify_block_preservation(rep, tc));
  out.push_back(action::verify_alpha_tau(rep, tc));
  append(action::verify_oracle_equivalence(rep, tc));
  return out;
}

std::vector<CheckResult> noncompact_suite(const RunConfig& cfg, Outcome& outcome) {
  const auto tc = cfg.truncation();
  const auto w = action::noncompact_witness(cfg.theta, tc);
  auto out = action::verify_noncompact_witness(w);
  outcome.tail = w.profile;
  outcome.degenerate = w.degenerate;

  const auto profile = podles::compactness_profile(action::contrast_commutator(tc), tc.buffer);
  const auto expected = action::contrast_expected_tail(tc);
  double rel = 0.0;
  for (std::size_t k = 0; k < expected.size(); ++k)
    rel = std::max(rel, std::abs(profile.tail_norms[k] - expected[k]) / expected[k]);
  std::ostringstream os;
  os << std::setprecision(3) << "tail at k = M/2: " << profile.tail_norms[static_cast<std::size_t>(tc.M / 2)];
  out.push_back(make_check("noncompact.contrast_profile",
                           "tails of [tau_1, pi_+(A)] are lambda_+ mu^{2(k-1)} (1 - mu^2)", rel, 1e-10,
                           CheckKind::numeric, os.str()));
  return out;
}

std::vector<CheckResult> quotient_suite(const RunConfig& cfg) {
  auto out = action::verify_quotient(cfg.truncation(), cfg.N_quotient);
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> pick(0, 8);
  constexpr int kTrials = 100;
  int bad = 0;
  for (int t = 0; t < kTrials; ++t) {
    const auto w = freeprod::random_word(rng, 12, 10);
    const action::QuotientMorphism a(pick(rng)), b(pick(rng));
    bad += (a(b(w)) != action::compose(a, b)(w)) || (b(a(w)) != a(b(w)));
  }
  out.push_back(count_check("quotient.functoriality", "pi_N o pi_N' = pi_min(N, N')", bad, kTrials));
  return out;
}

CheckResult skipped(const std::string& suite, const std::string& cause) {
  CheckResult r;
  r.id = suite + ".skipped";
  r.statement = "suite " + suite;
  r.status = CheckStatus::skip;
  r.details = "skipped: symbolic failure in " + cause;
  return r;
}

bool symbolic_failure_since(const Report& report, std::size_t from) {
  for (std::size_t i = from; i < report.records.size(); ++i)
    if (report.records[i].kind == CheckKind::symbolic && report.records[i].status == CheckStatus::fail) return true;
  return false;
}

Outcome execute(const RunConfig& cfg) {
  cfg.validate();
  const std::set<std::string> wanted(cfg.suites.begin(), cfg.suites.end());
  const auto rep = make_rep(cfg);
  Outcome outcome;
  Report& report = outcome.report;
  std::string blocked;  // suite whose symbolic failure aborts the dependents

  const std::set<std::string> dependents{"action", "noncompact", "quotient", "volume"};
  for (const auto& suite : kSuiteOrder) {
    if (!wanted.count(suite)) continue;
    if (!blocked.empty() && dependents.count(suite)) {
      report.add({skipped(suite, blocked)}, 0.0);
      continue;
    }
    const std::size_t first = report.records.size();
    if (suite == "words") timed(report, [&] { return words_suite(cfg); });
    else if (suite == "podles") timed(report, [&] { return podles_suite(cfg); });
    else if (suite == "commutant") timed(report, [&] { return commutant_suite(cfg); });
    else if (suite == "action") timed(report, [&] { return action_suite(cfg, rep); });
    else if (suite == "noncompact") timed(report, [&] { return noncompact_suite(cfg, outcome); });
    else if (suite == "quotient") timed(report, [&] { return quotient_suite(cfg); });
    else if (suite == "volume") timed(report, [&] { return action::verify_volume_invariance(rep, cfg.truncation()); });
    if ((suite == "words" || suite == "action") && symbolic_failure_since(report, first) && blocked.empty())
      blocked = suite;
  }
  return outcome;
}

void write_artifacts(const RunConfig& cfg, const Outcome& outcome) {
  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + cfg.output_dir.string() + ": " + ec.message());
  {
    std::ofstream os(cfg.output_dir / "report.json");
    if (!os) throw std::runtime_error("cannot write report.json in " + cfg.output_dir.string());
    os << outcome.report.to_json().dump(2) << '\n';
  }
  if (outcome.tail) {
    std::ofstream os(cfg.output_dir / "tail_norms.csv");
    if (!os) throw std::runtime_error("cannot write tail_norms.csv in " + cfg.output_dir.string());
    podles::write_profile_csv(os, *outcome.tail, {cfg.theta, cfg.mu, cfg.c, cfg.M});
  }
}

}  // namespace

Report run_suites(const RunConfig& cfg) { return execute(cfg).report; }

Report run(const RunConfig& cfg) {
  auto outcome = execute(cfg);
  write_artifacts(cfg, outcome);
  return std::move(outcome.report);
}

GridSpec grid_from_json(const json& j, RunConfig& tmpl) {
  if (!j.is_object()) throw ConfigError("grid file must be a table");
  json rest = json::object();
  GridSpec g;
  const auto reals = [](const json& v, const std::string& key) {
    std::vector<double> out;
    if (v.is_array())
      for (const auto& x : v) out.push_back(get_real(x, key));
    else
      out.push_back(get_real(v, key));
    return out;
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "mu") g.mu = reals(v, key);
    else if (key == "c") g.c = reals(v, key);
    else if (key == "theta") g.theta = reals(v, key);
    else if (key == "M") {
      if (v.is_array())
        for (const auto& x : v) g.M.push_back(get_int(x, key));
      else
        g.M.push_back(get_int(v, key));
    } else {
      rest[key] = v;
    }
  }
  tmpl = config_from_json(rest, tmpl);
  if (g.mu.empty()) g.mu = {tmpl.mu};
  if (g.c.empty()) g.c = {tmpl.c};
  if (g.theta.empty()) g.theta = {tmpl.theta};
  if (g.M.empty()) g.M = {tmpl.M};
  return g;
}

std::vector<GridRow> run_grid(const RunConfig& tmpl, const GridSpec& grid) {
  if (grid.mu.empty() || grid.c.empty() || grid.theta.empty() || grid.M.empty())
    throw ConfigError("grid must be nonempty along every axis");
  std::vector<GridRow> rows;
  int index = 0;
  for (double mu : grid.mu)
    for (double c : grid.c)
      for (double theta : grid.theta)
        for (int M : grid.M) {
          GridRow row;
          row.index = index;
          row.mu = mu;
          row.c = c;
          row.theta = theta;
          row.M = M;
          RunConfig cell = tmpl;
          cell.mu = mu;
          cell.c = c;
          cell.theta = theta;
          cell.M = M;
          cell.output_dir = tmpl.output_dir / ("cell_" + std::to_string(index));
          row.noncompact_status = "not-run";
          try {
            cell.validate();
          } catch (const ConfigError& e) {
            row.status = "config-invalid";
            row.exit_code = kConfigError;
            row.error = e.what();
            row.noncompact_tail_norm = std::nan("");
            row.podles_max_residual = std::nan("");
            rows.push_back(row);
            ++index;
            continue;
          }
          const auto outcome = execute(cell);
          write_artifacts(cell, outcome);
          const auto& rep = outcome.report;
          row.exit_code = rep.exit_code();
          row.status = row.exit_code == kAllPass ? "pass" : "fail";
          row.passed = rep.count(CheckStatus::pass);
          row.failed = rep.count(CheckStatus::fail);
          row.skipped = rep.count(CheckStatus::skip);
          row.podles_max_residual = std::nan("");
          bool noncompact_failed = false, noncompact_seen = false;
          for (const auto& r : rep.records) {
            if (r.check_id.rfind("podles.relation.", 0) == 0)
              row.podles_max_residual =
                  std::isnan(row.podles_max_residual) ? r.residual : std::max(row.podles_max_residual, r.residual);
            if (r.check_id.rfind("noncompact.", 0) == 0) {
              noncompact_seen = true;
              noncompact_failed |= r.status == CheckStatus::fail;
            }
          }
          row.noncompact_tail_norm = outcome.tail ? outcome.tail->min_tail : std::nan("");
          if (noncompact_seen)
            row.noncompact_status = outcome.degenerate ? "degenerate" : noncompact_failed ? "fail" : "pass";
          rows.push_back(row);
          ++index;
        }
  return rows;
}

void write_summary_csv(std::ostream& os, const std::vector<GridRow>& rows) {
  os << "grid_index,mu,c,theta,M,status,passed,failed,skipped,podles_max_residual,noncompact_tail_norm,"
        "noncompact_status\n";
  os << std::setprecision(17);
  const auto num = [](double v) {
    std::ostringstream s;
    s << std::setprecision(17);
    if (std::isnan(v))
      s << "";
    else
      s << v;
    return s.str();
  };
  for (const auto& r : rows)
    os << r.index << ',' << r.mu << ',' << r.c << ',' << r.theta << ',' << r.M << ',' << r.status << ','
       << r.passed << ',' << r.failed << ',' << r.skipped << ',' << num(r.podles_max_residual) << ','
       << num(r.noncompact_tail_norm) << ',' << r.noncompact_status << '\n';
}

int grid_exit_code(const std::vector<GridRow>& rows) {
  int code = kAllPass;
  for (const auto& r : rows) {
    if (r.exit_code == kConfigError) return kConfigError;
    code = std::max(code, r.exit_code);
  }
  return code;
}

}  // namespace qiso::verify
