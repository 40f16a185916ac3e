#include <gtest/gtest.h>

#include <random>

#include "qiso/action/action.hpp"
#include "qiso/action/quotient.hpp"
#include "qiso/freeprod/random.hpp"
#include "qiso/podles/operators.hpp"

using namespace qiso;
using namespace qiso::action;
using podles::TruncationConfig;

namespace {

using GAE = GroupAlgebraElement;

TruncationConfig cfg(int M, double mu = 0.5, double c = 2.0) { return {M, mu, c, 2}; }

}  // namespace

TEST(Quotient, GeneratorImages) {
  const QuotientMorphism pi2(2);
  EXPECT_EQ(pi2(Word::r(5)), Word{});
  EXPECT_EQ(pi2(Word::r(1)), Word::r(1));
  EXPECT_EQ(pi2(Word::r(0)), Word::r(0));
  EXPECT_EQ(pi2(Word::r(2, -3)), Word::r(2, -3));
  EXPECT_EQ(pi2(Word::y()), Word::y());
  // Deleting r_5 lets the neighbours merge.
  EXPECT_EQ(pi2(Word::r(1) * Word::r(5) * Word::r(1)), Word::r(1, 2));
  EXPECT_EQ(pi2(Word::y() * Word::r(7) * Word::y()), Word{});
  EXPECT_THROW(QuotientMorphism(-1), std::invalid_argument);
}

TEST(Quotient, Functoriality) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> pick(0, 8);
  for (int t = 0; t < 100; ++t) {
    const auto w = freeprod::random_word(rng, 12, 10);
    const QuotientMorphism a(pick(rng)), b(pick(rng));
    EXPECT_EQ(a(b(w)), compose(a, b)(w));
    EXPECT_EQ(a(b(w)), b(a(w)));
  }
}

TEST(Quotient, IsStarHomomorphism) {
  std::mt19937_64 rng(43);
  const QuotientMorphism pi(3);
  for (int t = 0; t < 200; ++t) {
    const auto a = freeprod::random_element(rng, 3, 8, 6);
    const auto b = freeprod::random_element(rng, 3, 8, 6);
    EXPECT_LE(freeprod::distance(pi(a * b), pi(a) * pi(b)), 1e-14);
    EXPECT_LE(freeprod::distance(pi(a.star()), pi(a).star()), 1e-15);
  }
}

TEST(Quotient, AlphaTauCoefficients) {
  const auto t = cfg(16);
  const auto rep = default_rep(t.M);
  for (int N : {1, 2, 4}) {
    const auto q = QuotientMorphism(N)(alpha_tau(rep, t));
    for (int n = 1; n < t.M; ++n) {
      const auto& coef = q.at(podles::Leg::plus, n - 1, podles::Leg::plus, n);
      if (n <= N)
        EXPECT_EQ(coef, GAE(Word::r(n - 1) * Word::r(n, -1)));
      else if (n == N + 1)
        EXPECT_EQ(coef, GAE::r(N));
      else
        EXPECT_EQ(coef, GAE::identity());
    }
  }
}

TEST(Quotient, AlphaAFormsAgree) {
  for (int N : {1, 2, 4}) {
    const auto t = cfg(32);
    EXPECT_LE(max_entry_distance(quotient_alpha_A_four_sums(t, N), quotient_alpha_A_compact(t, N)), 1e-14);
  }
}

TEST(Quotient, BTailSeriesMatchesFunctionalCalculus) {
  for (double mu : {0.3, 0.5, 0.9})
    for (double c : {0.1, 2.0, 10.0}) {
      const auto t = cfg(24, mu, c);
      for (auto leg : {podles::Leg::plus, podles::Leg::minus})
        for (int sign : {1, -1}) {
          const auto d = b_tail_series(t, 2, leg, sign) - b_tail_functional(t, 2, leg, sign);
          EXPECT_LE(d.matrix().cwiseAbs().maxCoeff(), 1e-10) << mu << " " << c;
        }
    }
}

TEST(Quotient, FullVerification) {
  for (int N : {1, 2, 4})
    for (const auto& r : verify_quotient(cfg(32), N)) EXPECT_TRUE(r.passed()) << r.id << " " << r.residual;
}

TEST(Quotient, RejectsBadIndex) {
  EXPECT_THROW(verify_quotient(cfg(8), 0), std::invalid_argument);
  EXPECT_THROW(verify_quotient(cfg(8), 6), std::invalid_argument);
}
