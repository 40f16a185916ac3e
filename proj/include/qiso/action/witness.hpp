#pragma once

#include <complex>
#include <vector>

#include "qiso/check.hpp"
#include "qiso/podles/block_operator.hpp"
#include "qiso/podles/compactness.hpp"
#include "qiso/podles/truncation.hpp"

namespace qiso::action {

/// Commutator witness for non-compactness of [alpha_phi(tau), tau].
///
/// alpha_phi(tau) = (id (x) phi_theta) ad_U(tau) for the default representation
/// is the down-shift with weights lambda_n = e^{2 pi i n theta}. The leg-wise
/// commutators
///   K+ = [alpha_phi(tau) P+, tau_1 (+) 0],  K- = [alpha_phi(tau) P-, 0 (+) tau_1]
/// send e_n to (lambda_{n-1} - lambda_n) e_{n-2} on their leg, so their sum has
/// tail norms |1 - e^{2 pi i theta}| that never decay.
struct WitnessResult {
  double theta = 0.0;
  podles::BlockOperator alpha_phi_tau{0};
  podles::BlockOperator K_plus{0};
  podles::BlockOperator K_minus{0};
  podles::CompactnessProfile profile;  // of K+ + K-
  std::vector<std::complex<double>> lambda;  // lambda_n, n < M
  double entry_error = 0.0;      // max |K e_n - (lambda_{n-1} - lambda_n) e_{n-2}| on interior columns
  double expected_tail = 0.0;    // |1 - e^{2 pi i theta}|
  double tail_error = 0.0;       // max_k |tail_k - expected_tail|
  bool degenerate = false;       // theta integral: K = 0, nothing to witness
};

WitnessResult noncompact_witness(double theta, const podles::TruncationConfig& cfg, double delta = 0.5);

std::vector<CheckResult> verify_noncompact_witness(const WitnessResult& w, double entry_tol = 1e-12,
                                                   double tail_tol = 1e-10);

/// Compact contrast [tau_1 (+) 0, pi_+(A)]: its tail norms are
/// lambda_+ mu^{2(max(k,1)-1)} (1 - mu^2).
podles::BlockOperator contrast_commutator(const podles::TruncationConfig& cfg);
std::vector<double> contrast_expected_tail(const podles::TruncationConfig& cfg);

}  // namespace qiso::action
