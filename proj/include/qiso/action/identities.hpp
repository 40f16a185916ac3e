#pragma once

#include <string>
#include <vector>

#include "qiso/action/action.hpp"
#include "qiso/check.hpp"

namespace qiso::action {

/// Coefficient tolerance for "reduces to the zero element".
inline constexpr double kSymbolicTolerance = 1e-12;

/// One instance of a word-level identity, evaluated as `lhs - rhs`.
/// `support` lists the representation indices n whose q+_n / q-_n enter it.
struct IdentityInstance {
  std::string identity;
  int n = 0;
  std::vector<int> support;
  GroupAlgebraElement value;
  double residual = 0.0;

  bool holds(double tol = kSymbolicTolerance) const { return residual <= tol; }
};

/// The four relations a D-equivariant unitary must satisfy for ad_U to keep
/// pi(A), pi(B) block-diagonal, with s_{+/-} = c_{+/-}(n)^{1/2}, S = s at n+1:
///   q1(n), n >= 0:  q+_n q-_n^* - q-_n q+_n^*
///   q2(n), n >= 1:  (s+ + s-)(q+_{n-1} q+_n^* - q-_{n-1} q-_n^*) + (s+ - s-)(q+_{n-1} q-_n^* - q-_{n-1} q+_n^*)
///   q3(n), n >= 1:  (s+ + s-)(q+_{n-1} q+_n^* - q-_{n-1} q-_n^*) + (s+ - s-)(q-_{n-1} q+_n^* - q+_{n-1} q-_n^*)
///   q4(n), n >= 0:  (S+ + S-)(q+_{n+1} q+_n^* - q-_{n+1} q-_n^*) - (S+ - S-)(q-_{n+1} q+_n^* - q+_{n+1} q-_n^*)
std::vector<IdentityInstance> q_relation_instances(const EquivariantRep& rep, const podles::TruncationConfig& cfg);

/// Generator identities, with y_n = q-_n^* q+_n, z_n = q+_{n-1} q+_n^*,
/// w_n = q+_{n-1} y_0 q+_n^*, w' = w_1^* z_1:
///   q-_n = q+_n y_{n-1};  y_n self-adjoint unitary;  y_n = y_{n-1};
///   w_{n+1} = z_n^* w_n z_{n+1};  z_n^* w_n = q+_n q-_n^*;
///   w' self-adjoint unitary;  q+_0 q-_0^* = w_1 z_1^*.
std::vector<IdentityInstance> proposition_instances(const EquivariantRep& rep, int M);

/// With r-_n = r+_n y: r+_n r-_n^* = r-_n r+_n^*, r+_{n-1} r-_n^* = r-_{n-1} r+_n^*,
/// r+_{n-1} r+_n^* = r-_{n-1} r-_n^*, r-_n r+_{n-1}^* = r+_n r-_{n-1}^*, r+_n r+_{n-1}^* = r-_n r-_{n-1}^*.
std::vector<IdentityInstance> r_identity_instances(int M);

/// Aggregates instances into one check per identity name (residual = max).
std::vector<CheckResult> summarize(const std::vector<IdentityInstance>& instances, const std::string& prefix,
                                   double tol = kSymbolicTolerance);

std::vector<CheckResult> verify_q_relations(const EquivariantRep& rep, const podles::TruncationConfig& cfg);
std::vector<CheckResult> verify_proposition_generators(const EquivariantRep& rep, const podles::TruncationConfig& cfg);

/// U~ U~* = U~* U~ = 1 at the word level.
std::vector<CheckResult> verify_unitarity(const GAOperator& U);
/// U~ (D (x) 1) = (D (x) 1) U~.
CheckResult verify_commutes_with_dirac(const GAOperator& U, const BlockOperator& D);
/// (id (x) Delta) U~ = U~_12 U~_13 entrywise, plus Delta(q) = q (x) q for every q+-_n, y and y_n.
std::vector<CheckResult> verify_corepresentation(const GAOperator& U, const EquivariantRep& rep);
/// (Tr (x) id) ad_U(X) = Tr(X) 1 for X = |xi><eta| / 2 over all pairs of
/// D-eigenvectors xi, eta = (e_n, +-e_n), and for X = 1.
std::vector<CheckResult> verify_volume_invariance(const EquivariantRep& rep, const podles::TruncationConfig& cfg);

/// ad_U(A), ad_U(B) against the closed-form series (coefficient tolerance).
std::vector<CheckResult> verify_oracle_equivalence(const EquivariantRep& rep, const podles::TruncationConfig& cfg,
                                                   double tol = 1e-12);
/// Every entry of ad_U(A), ad_U(B) between the two legs is the zero element.
CheckResult verify_block_preservation(const EquivariantRep& rep, const podles::TruncationConfig& cfg);
/// ad_U(tau) against sum_{n>=1} tau (P_n + Q_n) (x) q+_{n-1} q+_n^*.
CheckResult verify_alpha_tau(const EquivariantRep& rep, const podles::TruncationConfig& cfg);

}  // namespace qiso::action
