#include "qiso/action/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qiso/action/action.hpp"
#include "qiso/freeprod/character.hpp"
#include "qiso/podles/operators.hpp"

namespace qiso::action {

using podles::BlockOperator;
using podles::Leg;
using podles::TruncationConfig;

WitnessResult noncompact_witness(double theta, const TruncationConfig& cfg, double delta) {
  cfg.validate();
  if (!std::isfinite(theta)) throw podles::ConfigError("theta must be finite");

  WitnessResult w;
  w.theta = theta;
  const auto rep = default_rep(cfg.M);
  const auto U = build_U(rep, cfg);
  const auto tau = podles::build_tau(cfg);
  w.alpha_phi_tau = ad_U(tau, U).apply_character(freeprod::make_phi(theta));

  const auto Pp = podles::leg_projection(cfg.M, Leg::plus);
  const auto Pm = podles::leg_projection(cfg.M, Leg::minus);
  const auto tp = podles::build_leg_shift(cfg, Leg::plus);
  const auto tm = podles::build_leg_shift(cfg, Leg::minus);
  const auto ap = w.alpha_phi_tau * Pp;
  const auto am = w.alpha_phi_tau * Pm;
  w.K_plus = ap * tp - tp * ap;
  w.K_minus = am * tm - tm * am;
  const auto K = w.K_plus + w.K_minus;

  for (int n = 0; n < cfg.M; ++n) w.lambda.push_back(freeprod::unit_phase(n * theta));

  w.expected_tail = std::abs(Complex(1.0) - freeprod::unit_phase(theta));
  w.degenerate = w.expected_tail < 1e-12;

  const Leg legs[] = {Leg::plus, Leg::minus};
  for (int n = 0; n <= cfg.interior_limit(); ++n)
    for (Leg leg : legs) {
      podles::Vector expected = podles::Vector::Zero(cfg.dim());
      if (n >= 2) expected(BlockOperator::index(leg, n - 2, cfg.M)) = w.lambda[n - 1] - w.lambda[n];
      const podles::Vector col = K.matrix().col(BlockOperator::index(leg, n, cfg.M));
      w.entry_error = std::max(w.entry_error, (col - expected).cwiseAbs().maxCoeff());
    }

  w.profile = podles::compactness_profile(K, cfg.buffer, delta);
  // Columns 0 and 1 are annihilated, so the tail is constant from k = 0 on.
  for (double t : w.profile.tail_norms) w.tail_error = std::max(w.tail_error, std::abs(t - w.expected_tail));
  return w;
}

std::vector<CheckResult> verify_noncompact_witness(const WitnessResult& w, double entry_tol, double tail_tol) {
  std::vector<CheckResult> out;
  out.push_back(make_check("noncompact.entries", "K(0, e_n) = (lambda_{n-1} - lambda_n)(0, e_{n-2}) and leg-plus analogue",
                           w.entry_error, entry_tol, CheckKind::numeric));
  std::ostringstream os;
  os << "expected tail " << w.expected_tail << ", min tail " << w.profile.min_tail;
  out.push_back(make_check("noncompact.tail_constant", "tail norms equal |1 - e^{2 pi i theta}|", w.tail_error, tail_tol,
                           CheckKind::numeric, os.str()));
  if (w.degenerate) {
    CheckResult r;
    r.id = "noncompact.witness";
    r.statement = "[alpha_phi(tau), tau] bounded below on every tail";
    r.status = CheckStatus::skip;
    r.details = "degenerate: theta is an integer, lambda_n = 1 and K = 0";
    out.push_back(r);
  } else {
    out.push_back(make_check("noncompact.witness", "[alpha_phi(tau), tau] bounded below on every tail",
                             w.profile.non_compact_witness ? 0.0 : w.profile.delta - w.profile.min_tail, 0.0,
                             CheckKind::numeric, "delta " + std::to_string(w.profile.delta)));
  }
  return out;
}

BlockOperator contrast_commutator(const TruncationConfig& cfg) {
  const auto pi = podles::build_pi(cfg);
  const auto tp = podles::build_leg_shift(cfg, Leg::plus);
  const auto Aplus = pi.A * podles::leg_projection(cfg.M, Leg::plus);
  return tp * Aplus - Aplus * tp;
}

std::vector<double> contrast_expected_tail(const TruncationConfig& cfg) {
  std::vector<double> out;
  const double mu2 = cfg.mu * cfg.mu;
  for (int k = 0; k <= cfg.interior_limit(); ++k)
    out.push_back(cfg.lambda_plus() * cfg.mu2n(std::max(k, 1) - 1) * (1.0 - mu2));
  return out;
}

}  // namespace qiso::action
