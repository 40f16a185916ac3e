#pragma once

#include <vector>

#include "qiso/action/ga_operator.hpp"
#include "qiso/check.hpp"
#include "qiso/podles/truncation.hpp"

namespace qiso::action {

/// The surjection pi_N : C[Z_2 * Z^inf] -> C[Z_2 * Z^N] fixing y and r_0..r_N
/// and sending every r_k with k > N to e.
class QuotientMorphism {
 public:
  explicit QuotientMorphism(int N);

  int N() const { return N_; }

  Word operator()(const Word& w) const;
  GroupAlgebraElement operator()(const GroupAlgebraElement& a) const;
  /// id (x) pi_N, entrywise.
  GAOperator operator()(const GAOperator& X) const;

 private:
  int N_;
};

/// pi_N o pi_N' = pi_min(N, N').
QuotientMorphism compose(const QuotientMorphism& a, const QuotientMorphism& b);

/// (id (x) pi_N) alpha(A) written as four sums: n <= N with coefficients in
/// r_n y r_n^*, and n > N with coefficients in y alone.
GAOperator quotient_alpha_A_four_sums(const podles::TruncationConfig& cfg, int N);
/// Same, with the n > N sums collapsed to A(P+ - sum_{n<=N} P_n) and A(P- - sum_{n<=N} Q_n).
GAOperator quotient_alpha_A_compact(const podles::TruncationConfig& cfg, int N);

/// sum_{n >= N+2} B R_n (s_l + sign s_o) / (2 c_l(n)) on leg l (o the other leg),
/// where R_n is P_n or Q_n.
podles::BlockOperator b_tail_series(const podles::TruncationConfig& cfg, int N, Leg leg, int sign);
/// (1/2) B R [F^{-1/2} + sign F^{-1} G^{1/2}] R with F = A - A^2 + c,
/// G = kA - (kA)^2 + c, k = lambda_o / lambda_l, and R the projection onto
/// leg-l indices n >= N+2 (where F is invertible).
podles::BlockOperator b_tail_functional(const podles::TruncationConfig& cfg, int N, Leg leg, int sign);

/// Checks that the quotient of the action by pi_N has the stated closed forms.
std::vector<CheckResult> verify_quotient(const podles::TruncationConfig& cfg, int N, double tol = 1e-10);

}  // namespace qiso::action
