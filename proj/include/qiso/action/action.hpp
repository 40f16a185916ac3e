#pragma once

#include "qiso/action/equivariant_rep.hpp"
#include "qiso/action/ga_operator.hpp"
#include "qiso/podles/truncation.hpp"

namespace qiso::action {

/// The unitary U~ acting by q+_n on (e_n, e_n) and by q-_n on (e_n, -e_n).
/// In the standard basis the n-th 2x2 block mixing the legs is
///   1/2 [[q+ + q-, q+ - q-], [q+ - q-, q+ + q-]].
GAOperator build_U(const EquivariantRep& rep, const podles::TruncationConfig& cfg);

/// ad_U(x) = U~ (x (x) 1) U~*, by direct group-algebra matrix multiplication.
GAOperator ad_U(const BlockOperator& x, const GAOperator& U);

/// X (x) coef added into `target`.
void add_tensor(GAOperator& target, const BlockOperator& X, const GroupAlgebraElement& coef);

/// Truncated series sum_n A P_n (x) a+_n + A Q_n (x) a-_n, with
///   a+_n = (2 lambda_+)^{-1} { lambda_+ (1 + x_n) + lambda_- (1 - x_n) },
///   a-_n = (2 lambda_-)^{-1} { lambda_+ (1 - x_n) + lambda_- (1 + x_n) },
///   x_n  = q+_n q-_n^*.
GAOperator closed_form_alpha_A(const EquivariantRep& rep, const podles::TruncationConfig& cfg);

/// Truncated series sum_{n>=1} B P_n (x) b+_n + B Q_n (x) b-_n, with
///   b+_n = (4 s_+)^{-1} [ (s_+ + s_-) X_n + (s_+ - s_-) Y_n ],
///   b-_n = (4 s_-)^{-1} [ (s_+ + s_-) X_n - (s_+ - s_-) Y_n ],
///   X_n = q+_{n-1} q+_n^* + q-_{n-1} q-_n^*,  Y_n = q-_{n-1} q+_n^* + q+_{n-1} q-_n^*,
///   s_{+/-} = c_{+/-}(n)^{1/2}.
/// Throws std::domain_error if some c_{+/-}(n), n >= 1, vanishes.
GAOperator closed_form_alpha_B(const EquivariantRep& rep, const podles::TruncationConfig& cfg);

/// sum_{n>=1} tau (P_n + Q_n) (x) q+_{n-1} q+_n^*.
GAOperator alpha_tau(const EquivariantRep& rep, const podles::TruncationConfig& cfg);

}  // namespace qiso::action
