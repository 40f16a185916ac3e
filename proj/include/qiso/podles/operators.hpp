#pragma once

#include <vector>

#include "qiso/check.hpp"
#include "qiso/podles/block_operator.hpp"

namespace qiso::podles {

/// pi(A), pi(B) for pi = pi_+ (+) pi_-.
struct PodlesGenerators {
  BlockOperator A;
  BlockOperator B;
};

/// A diagonal with entries lambda_{+/-} mu^{2n}; B the down-shift with
/// weights c_{+/-}(n)^{1/2} (so B e_0 = 0). Validates cfg.
PodlesGenerators build_pi(const TruncationConfig& cfg);

struct DiracEigenvector {
  int eigenvalue;  // m
  int n;           // basis index carrying the vector
  int sign;        // +1 for (e_n, e_n), -1 for (e_n, -e_n)
  Vector vector;   // normalized
};

struct DiracOperator {
  BlockOperator D;
  /// (e_n, e_n)/sqrt2 with eigenvalue n and (e_n, -e_n)/sqrt2 with eigenvalue -n,
  /// for every n < M. Both n = 0 vectors have eigenvalue 0.
  std::vector<DiracEigenvector> eigenbasis;
};

/// D = [[0, N], [N, 0]] with N e_n = n e_n.
DiracOperator build_dirac(const TruncationConfig& cfg);

/// Unweighted down-shift tau_1 on both legs.
BlockOperator build_tau(const TruncationConfig& cfg);
/// tau_1 on one leg, zero on the other.
BlockOperator build_leg_shift(const TruncationConfig& cfg, Leg leg);
/// Orthogonal projection onto H_+ or H_-.
BlockOperator leg_projection(int M, Leg leg);

struct Projections {
  BlockOperator P;  // onto (e_n, 0)
  BlockOperator Q;  // onto (0, e_n)
};

/// Throws std::out_of_range unless 0 <= n < M.
Projections build_projections(const TruncationConfig& cfg, int n);

/// f(H) for Hermitian H via its eigendecomposition.
BlockOperator hermitian_function(const BlockOperator& H, double (*f)(double));
/// |X| = (X* X)^{1/2}.
BlockOperator operator_abs(const BlockOperator& X);

struct SpectralProjection {
  BlockOperator projection;
  int multiplicity;
};

/// Projection onto the eigenvectors of Hermitian H with |eigenvalue - value| <= tol.
SpectralProjection spectral_projection(const BlockOperator& H, double value, double tol);

/// Residual norms on interior vectors of
///   A* - A,  AB - mu^{-2} BA,  B*B - (A - A^2 + c),  BB* - (mu^2 A - mu^4 A^2 + c).
std::vector<CheckResult> verify_podles_relations(const BlockOperator& A, const BlockOperator& B,
                                                 const TruncationConfig& cfg, double tol = 1e-12);

/// Interior norm of B - tau |B|.
double polar_residual(const BlockOperator& B, const BlockOperator& tau, const TruncationConfig& cfg);

}  // namespace qiso::podles
