#include <gtest/gtest.h>

#include <vector>

#include "qiso/podles/commutant.hpp"
#include "qiso/podles/operators.hpp"

using namespace qiso::podles;

namespace {

std::vector<BlockOperator> podles_generators(int M, double mu = 0.5, double c = 2.0) {
  const auto pi = build_pi({M, mu, c, 2});
  return {pi.A, pi.B, pi.B.adjoint()};
}

std::vector<BlockOperator> matrix_units(int M, std::initializer_list<Leg> legs) {
  std::vector<BlockOperator> out;
  for (Leg leg : legs)
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j) {
        auto E = BlockOperator::zero(M);
        E(leg, i, leg, j) = 1.0;
        out.push_back(E);
      }
  return out;
}

}  // namespace

TEST(Commutant, PodlesGeneratorsGiveTwo) {
  for (int M : {4, 8, 16, 32}) {
    const auto res = commutant(podles_generators(M));
    EXPECT_EQ(res.dimension, 2u) << M;
    EXPECT_EQ(res.route, "reduced");
    EXPECT_GT(res.smallest_retained_sigma, 1e-6 * res.sigma_max) << "no spectral gap at M=" << M;
  }
}

TEST(Commutant, OtherParameters) {
  for (double mu : {0.3, 0.9})
    for (double c : {0.1, 10.0}) EXPECT_EQ(commutant_dimension(podles_generators(16, mu, c)), 2u) << mu << " " << c;
}

TEST(Commutant, DenseAndReducedRoutesAgree) {
  for (int M : {4, 8}) {
    const auto gens = podles_generators(M);
    CommutantOptions dense;
    dense.force_dense = true;
    const auto a = commutant(gens);
    const auto b = commutant(gens, dense);
    EXPECT_EQ(b.route, "dense");
    EXPECT_EQ(a.dimension, b.dimension);
    EXPECT_EQ(b.unknowns, static_cast<std::size_t>(4 * M * M));
  }
}

TEST(Commutant, SeedDoesNotMatter) {
  const auto gens = podles_generators(16);
  for (std::uint64_t seed : {1ULL, 2ULL, 0xdeadbeefULL}) {
    CommutantOptions o;
    o.seed = seed;
    EXPECT_EQ(commutant_dimension(gens, o), 2u);
  }
}

TEST(Commutant, IdentityCommutesWithEverything) {
  for (int M : {4, 8}) {
    const std::vector<BlockOperator> gens{BlockOperator::identity(M)};
    EXPECT_EQ(commutant_dimension(gens), static_cast<std::size_t>(4 * M * M));
  }
}

TEST(Commutant, DiagonalAGivesDiagonals) {
  // A alone has 2M distinct eigenvalues, so its commutant is the diagonal algebra.
  const auto pi = build_pi({6, 0.5, 2.0, 2});
  const std::vector<BlockOperator> gens{pi.A};
  EXPECT_EQ(commutant_dimension(gens), 12u);
  CommutantOptions dense;
  dense.force_dense = true;
  EXPECT_EQ(commutant_dimension(gens, dense), 12u);
}

TEST(Commutant, MatrixUnitsOnBothLegs) {
  const int M = 4;
  EXPECT_EQ(commutant_dimension(matrix_units(M, {Leg::plus, Leg::minus})), 2u);
}

TEST(Commutant, MatrixUnitsOnOneLeg) {
  // Scalars on the leg where the units act, anything on the other leg.
  const int M = 4;
  EXPECT_EQ(commutant_dimension(matrix_units(M, {Leg::plus})), static_cast<std::size_t>(1 + M * M));
  CommutantOptions dense;
  dense.force_dense = true;
  EXPECT_EQ(commutant_dimension(matrix_units(M, {Leg::plus}), dense), static_cast<std::size_t>(1 + M * M));
}

TEST(Commutant, NonSelfAdjointSetUsesDenseRoute) {
  const auto pi = build_pi({4, 0.5, 2.0, 2});
  const std::vector<BlockOperator> gens{pi.B};
  const auto res = commutant(gens);
  EXPECT_EQ(res.route, "dense");
  EXPECT_GE(res.dimension, 2u);
}

TEST(Commutant, RejectsBadInput) {
  EXPECT_THROW(commutant(std::vector<BlockOperator>{}), std::invalid_argument);
  const std::vector<BlockOperator> mixed{BlockOperator::identity(4), BlockOperator::identity(5)};
  EXPECT_THROW(commutant(mixed), std::invalid_argument);
}
