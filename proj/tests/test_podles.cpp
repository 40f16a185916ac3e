#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "qiso/podles/compactness.hpp"
#include "qiso/podles/operators.hpp"

using namespace qiso::podles;

namespace {

TruncationConfig cfg(double mu, double c, int M = 32) { return {M, mu, c, 2}; }

double entry(const BlockOperator& X, Leg rl, int r, Leg cl, int c) { return std::abs(X(rl, r, cl, c)); }

}  // namespace

TEST(Truncation, Validation) {
  EXPECT_NO_THROW(cfg(0.5, 2.0).validate());
  EXPECT_THROW(cfg(1.0, 2.0).validate(), ConfigError);
  EXPECT_THROW(cfg(0.0, 2.0).validate(), ConfigError);
  EXPECT_THROW(cfg(0.5, 0.0).validate(), ConfigError);
  EXPECT_THROW(cfg(0.5, -1.0).validate(), ConfigError);
  EXPECT_THROW(cfg(0.5, 2.0, 3).validate(), ConfigError);
  EXPECT_THROW((TruncationConfig{8, 0.5, 2.0, 1}).validate(), ConfigError);
  EXPECT_THROW((TruncationConfig{8, 0.5, 2.0, 8}).validate(), ConfigError);
  EXPECT_THROW(build_pi(cfg(1.5, 2.0)), ConfigError);
}

TEST(Truncation, DefaultConstants) {
  const auto t = cfg(0.5, 2.0);
  EXPECT_EQ(t.lambda_plus(), 2.0);
  EXPECT_EQ(t.lambda_minus(), -1.0);
  EXPECT_DOUBLE_EQ(t.c_plus(1), 2.25);
  EXPECT_DOUBLE_EQ(t.c_minus(1), 1.6875);
  EXPECT_EQ(t.c_plus(0), 0.0);
  EXPECT_EQ(t.c_minus(0), 0.0);
}

TEST(Truncation, FactoredCMatchesDefinition) {
  // Oracle: the defining expression x - x^2 + c, in long double.
  for (double mu : {0.2, 0.5, 0.9, 0.99})
    for (double c : {0.1, 2.0, 10.0}) {
      const auto t = cfg(mu, c, 64);
      const long double lp = 0.5L + std::sqrt(static_cast<long double>(c) + 0.25L);
      const long double lm = 0.5L - std::sqrt(static_cast<long double>(c) + 0.25L);
      for (int n = 0; n < 64; ++n) {
        const long double m = std::pow(static_cast<long double>(mu), 2.0L * n);
        const long double xp = lp * m, xm = lm * m;
        EXPECT_NEAR(t.c_plus(n), static_cast<double>(xp - xp * xp + c), 1e-13 * (1 + c));
        EXPECT_NEAR(t.c_minus(n), static_cast<double>(xm - xm * xm + c), 1e-13 * (1 + c));
        EXPECT_GE(t.c_plus(n), 0.0);
        EXPECT_GE(t.c_minus(n), 0.0);
      }
    }
}

TEST(Podles, GeneratorValues) {
  const auto t = cfg(0.5, 2.0);
  const auto pi = build_pi(t);
  EXPECT_EQ(pi.A(Leg::plus, 0, Leg::plus, 0), Complex(2.0));
  EXPECT_EQ(pi.A(Leg::plus, 1, Leg::plus, 1), Complex(0.5));
  EXPECT_EQ(pi.A(Leg::plus, 2, Leg::plus, 2), Complex(0.125));
  EXPECT_EQ(pi.A(Leg::minus, 0, Leg::minus, 0), Complex(-1.0));
  EXPECT_DOUBLE_EQ(pi.B(Leg::plus, 0, Leg::plus, 1).real(), 1.5);
  for (Leg leg : {Leg::plus, Leg::minus})
    EXPECT_EQ(pi.B.matrix().col(BlockOperator::index(leg, 0, t.M)).norm(), 0.0);
  EXPECT_TRUE(pi.A.is_block_diagonal());
  EXPECT_TRUE(pi.B.is_block_diagonal());
}

TEST(Podles, RelationsAcrossParameters) {
  for (double mu : {0.3, 0.5, 0.9})
    for (double c : {0.1, 2.0, 10.0}) {
      const auto t = cfg(mu, c);
      const auto pi = build_pi(t);
      const auto checks = verify_podles_relations(pi.A, pi.B, t);
      ASSERT_EQ(checks.size(), 4u);
      for (const auto& r : checks) EXPECT_TRUE(r.passed()) << r.id << " mu=" << mu << " c=" << c << " " << r.residual;
    }
}

TEST(Podles, RelationsDetectPerturbation) {
  const auto t = cfg(0.5, 2.0);
  auto pi = build_pi(t);
  pi.B(Leg::plus, 2, Leg::plus, 3) *= 1.001;
  bool failed = false;
  for (const auto& r : verify_podles_relations(pi.A, pi.B, t)) failed |= r.failed();
  EXPECT_TRUE(failed);
}

TEST(Podles, QCommutationEntrywise) {
  const auto t = cfg(0.5, 2.0);
  const auto pi = build_pi(t);
  const auto AB = pi.A * pi.B;
  const auto BA = (1.0 / (t.mu * t.mu)) * (pi.B * pi.A);
  for (Leg leg : {Leg::plus, Leg::minus})
    for (int n = 1; n < t.M; ++n) {
      const double expected = t.lambda(leg) * t.mu2n(n - 1) * t.weight(leg, n);
      EXPECT_NEAR(AB(leg, n - 1, leg, n).real(), expected, 1e-14);
      EXPECT_NEAR(BA(leg, n - 1, leg, n).real(), expected, 1e-14);
    }
}

TEST(Podles, BStarBKillsGroundState) {
  const auto t = cfg(0.5, 2.0);
  const auto pi = build_pi(t);
  const auto BsB = pi.B.adjoint() * pi.B;
  EXPECT_EQ(entry(BsB, Leg::plus, 0, Leg::plus, 0), 0.0);
  EXPECT_EQ(entry(BsB, Leg::minus, 0, Leg::minus, 0), 0.0);
}

TEST(Dirac, Eigenvectors) {
  const auto t = cfg(0.5, 2.0, 8);
  const auto dirac = build_dirac(t);
  const auto v = [&](int n, int s) {
    Vector x = basis_vector(t.M, Leg::plus, n) + double(s) * basis_vector(t.M, Leg::minus, n);
    return x;
  };
  EXPECT_LE((dirac.D.matrix() * v(3, 1) - 3.0 * v(3, 1)).norm(), 0.0);
  EXPECT_LE((dirac.D.matrix() * v(3, -1) + 3.0 * v(3, -1)).norm(), 0.0);
  EXPECT_EQ((dirac.D.matrix() * v(0, 1)).norm(), 0.0);
  EXPECT_EQ((dirac.D.matrix() * v(0, -1)).norm(), 0.0);
  ASSERT_EQ(dirac.eigenbasis.size(), 2u * t.M);
  for (const auto& e : dirac.eigenbasis) {
    EXPECT_NEAR(e.vector.norm(), 1.0, 1e-15);
    EXPECT_LE((dirac.D.matrix() * e.vector - double(e.eigenvalue) * e.vector).norm(), 1e-15);
    EXPECT_EQ(e.eigenvalue, e.sign * e.n);
  }
}

TEST(Tau, ShiftAndPolar) {
  const auto t = cfg(0.5, 2.0);
  const auto tau = build_tau(t);
  EXPECT_EQ(tau.matrix().col(0).norm(), 0.0);
  EXPECT_EQ(tau(Leg::plus, 4, Leg::plus, 5), Complex(1.0));
  const auto pi = build_pi(t);
  const auto polar = tau * operator_abs(pi.B);
  for (int n = 1; n < t.M; ++n) EXPECT_NEAR(polar(Leg::plus, n - 1, Leg::plus, n).real(), t.weight(Leg::plus, n), 1e-13);
  EXPECT_LE(polar_residual(pi.B, tau, t), 1e-12);
}

TEST(Tau, PolarOnRandomConfigs) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> mu(0.05, 0.95), c(0.05, 20.0);
  for (int t = 0; t < 5; ++t) {
    const auto tc = cfg(mu(rng), c(rng));
    const auto pi = build_pi(tc);
    EXPECT_LE(polar_residual(pi.B, build_tau(tc), tc), 1e-12) << tc.mu << " " << tc.c;
  }
}

TEST(Projections, Examples) {
  const auto t = cfg(0.5, 2.0, 8);
  const auto p = build_projections(t, 2);
  EXPECT_EQ(p.P.matrix() * basis_vector(t.M, Leg::plus, 2), basis_vector(t.M, Leg::plus, 2));
  EXPECT_EQ((p.P.matrix() * basis_vector(t.M, Leg::minus, 2)).norm(), 0.0);
  EXPECT_THROW(build_projections(t, 8), std::out_of_range);
  EXPECT_THROW(build_projections(t, -1), std::out_of_range);

  auto sum = BlockOperator::zero(t.M);
  const auto pi = build_pi(t);
  const auto BsB = pi.B.adjoint() * pi.B;
  for (int n = 0; n < t.M; ++n) {
    const auto pn = build_projections(t, n);
    sum = sum + pn.P + pn.Q;
    EXPECT_LE((BsB * pn.P - t.c_plus(n) * pn.P).matrix().norm(), 1e-14);
    EXPECT_LE((BsB * pn.Q - t.c_minus(n) * pn.Q).matrix().norm(), 1e-14);
  }
  EXPECT_EQ(sum.matrix(), BlockOperator::identity(t.M).matrix());
}

TEST(Projections, SpectralProjectionOfBStarB) {
  const auto t = cfg(0.5, 2.0, 8);
  const auto pi = build_pi(t);
  const auto sp = spectral_projection(pi.B.adjoint() * pi.B, t.c_plus(3), 1e-9);
  EXPECT_EQ(sp.multiplicity, 1);
  EXPECT_LE((sp.projection - build_projections(t, 3).P).matrix().norm(), 1e-12);
}

TEST(Compactness, DiagonalAndIdentity) {
  const int M = 16;
  Matrix d = Matrix::Zero(2 * M, 2 * M);
  for (int n = 0; n < M; ++n) d(n, n) = d(M + n, M + n) = 1.0 / (n + 1);
  const auto prof = compactness_profile(BlockOperator(M, d), 2);
  ASSERT_EQ(prof.tail_norms.size(), static_cast<std::size_t>(M - 1));
  for (std::size_t k = 0; k < prof.tail_norms.size(); ++k) EXPECT_NEAR(prof.tail_norms[k], 1.0 / (k + 1), 1e-14);
  EXPECT_FALSE(prof.non_compact_witness);

  const auto id = compactness_profile(BlockOperator::identity(M), 2);
  for (double v : id.tail_norms) EXPECT_NEAR(v, 1.0, 1e-14);
  EXPECT_TRUE(id.non_compact_witness);
}

TEST(Compactness, CsvSchema) {
  const auto prof = compactness_profile(BlockOperator::identity(4), 2);
  std::ostringstream os;
  write_profile_csv(os, prof, {0.25, 0.5, 2.0, 4});
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "k,tail_norm,theta,mu,c,M");
  std::getline(in, line);
  EXPECT_EQ(line, "0,1,0.25,0.5,2,4");
}
