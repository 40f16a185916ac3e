#include "qiso/podles/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace qiso::podles {

PodlesGenerators build_pi(const TruncationConfig& cfg) {
  cfg.validate();
  const int M = cfg.M;
  PodlesGenerators g{BlockOperator(M), BlockOperator(M)};
  for (Leg leg : {Leg::plus, Leg::minus}) {
    for (int n = 0; n < M; ++n) {
      g.A(leg, n, leg, n) = cfg.a_value(leg, n);
      if (n >= 1) g.B(leg, n - 1, leg, n) = cfg.weight(leg, n);
    }
  }
  return g;
}

DiracOperator build_dirac(const TruncationConfig& cfg) {
  const int M = cfg.M;
  DiracOperator out{BlockOperator(M), {}};
  for (int n = 0; n < M; ++n) {
    out.D(Leg::plus, n, Leg::minus, n) = static_cast<double>(n);
    out.D(Leg::minus, n, Leg::plus, n) = static_cast<double>(n);
  }
  const double s = 1.0 / std::numbers::sqrt2;
  for (int n = 0; n < M; ++n) {
    for (int sign : {+1, -1}) {
      Vector v = Vector::Zero(2 * M);
      v(n) = s;
      v(M + n) = sign * s;
      out.eigenbasis.push_back(DiracEigenvector{sign * n, n, sign, std::move(v)});
    }
  }
  return out;
}

BlockOperator build_leg_shift(const TruncationConfig& cfg, Leg leg) {
  BlockOperator t(cfg.M);
  for (int n = 1; n < cfg.M; ++n) t(leg, n - 1, leg, n) = 1.0;
  return t;
}

BlockOperator build_tau(const TruncationConfig& cfg) {
  return build_leg_shift(cfg, Leg::plus) + build_leg_shift(cfg, Leg::minus);
}

BlockOperator leg_projection(int M, Leg leg) {
  BlockOperator p(M);
  for (int n = 0; n < M; ++n) p(leg, n, leg, n) = 1.0;
  return p;
}

Projections build_projections(const TruncationConfig& cfg, int n) {
  if (n < 0 || n >= cfg.M)
    throw std::out_of_range("projection index " + std::to_string(n) + " outside [0, " + std::to_string(cfg.M) + ")");
  Projections out{BlockOperator(cfg.M), BlockOperator(cfg.M)};
  out.P(Leg::plus, n, Leg::plus, n) = 1.0;
  out.Q(Leg::minus, n, Leg::minus, n) = 1.0;
  return out;
}

BlockOperator hermitian_function(const BlockOperator& H, double (*f)(double)) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(H.matrix());
  if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_function: eigensolver failed");
  Eigen::VectorXd values = es.eigenvalues().unaryExpr(f);
  Matrix out = es.eigenvectors() * values.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  return BlockOperator(H.M(), std::move(out));
}

BlockOperator operator_abs(const BlockOperator& X) {
  // Roundoff can push zero eigenvalues of X*X slightly negative.
  return hermitian_function(X.adjoint() * X, [](double v) { return std::sqrt(std::max(v, 0.0)); });
}

SpectralProjection spectral_projection(const BlockOperator& H, double value, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(H.matrix());
  if (es.info() != Eigen::Success) throw std::runtime_error("spectral_projection: eigensolver failed");
  Matrix proj = Matrix::Zero(H.dim(), H.dim());
  int mult = 0;
  for (int i = 0; i < H.dim(); ++i) {
    if (std::abs(es.eigenvalues()(i) - value) <= tol) {
      proj += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
      ++mult;
    }
  }
  return {BlockOperator(H.M(), std::move(proj)), mult};
}

std::vector<CheckResult> verify_podles_relations(const BlockOperator& A, const BlockOperator& B,
                                                 const TruncationConfig& cfg, double tol) {
  const auto I = BlockOperator::identity(cfg.M);
  const double mu2 = cfg.mu * cfg.mu;
  const auto A2 = A * A;
  const auto Bs = B.adjoint();
  const Complex c = cfg.c;

  std::vector<CheckResult> out;
  auto add = [&](std::string id, std::string statement, const BlockOperator& residual) {
    out.push_back(make_check("podles.relation." + id, std::move(statement), interior_norm(residual, cfg), tol,
                             CheckKind::numeric));
  };
  add("self_adjoint", "A* = A", A.adjoint() - A);
  add("q_commutation", "AB = mu^-2 BA", A * B - Complex(1.0 / mu2) * (B * A));
  add("BstarB", "B*B = A - A^2 + cI", Bs * B - (A - A2 + c * I));
  add("BBstar", "BB* = mu^2 A - mu^4 A^2 + cI", B * Bs - (Complex(mu2) * A - Complex(mu2 * mu2) * A2 + c * I));
  return out;
}

double polar_residual(const BlockOperator& B, const BlockOperator& tau, const TruncationConfig& cfg) {
  return interior_norm(B - tau * operator_abs(B), cfg);
}

}  // namespace qiso::podles
