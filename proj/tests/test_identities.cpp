#include <gtest/gtest.h>

#include <algorithm>

#include "qiso/action/identities.hpp"
#include "qiso/podles/operators.hpp"

using namespace qiso;
using namespace qiso::action;
using podles::TruncationConfig;

namespace {

using GAE = GroupAlgebraElement;

TruncationConfig cfg(int M, double mu = 0.5, double c = 2.0) { return {M, mu, c, 2}; }

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

void expect_all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& r : checks) EXPECT_TRUE(r.passed()) << r.id << " residual " << r.residual << " " << r.details;
}

}  // namespace

TEST(QRelations, DefaultRepHoldsExactly) {
  for (double c : {0.1, 2.0, 10.0}) {
    const auto t = cfg(64, 0.5, c);
    const auto inst = q_relation_instances(default_rep(t.M), t);
    for (const auto& i : inst) ASSERT_TRUE(i.value.is_zero()) << i.identity << " n=" << i.n;
    EXPECT_EQ(verify_q_relations(default_rep(t.M), t).size(), 4u);
  }
}

TEST(QRelations, TrivialRepHolds) {
  const auto t = cfg(16);
  for (const auto& i : q_relation_instances(trivial_rep(t.M), t)) EXPECT_TRUE(i.value.is_zero());
}

TEST(QRelations, InstanceRanges) {
  const auto t = cfg(8);
  const auto inst = q_relation_instances(default_rep(t.M), t);
  const auto count = [&](const char* id) {
    return std::count_if(inst.begin(), inst.end(), [&](const IdentityInstance& i) { return i.identity == id; });
  };
  EXPECT_EQ(count("q1"), 8);
  EXPECT_EQ(count("q2"), 7);
  EXPECT_EQ(count("q3"), 7);
  EXPECT_EQ(count("q4"), 7);
}

TEST(QRelations, ViolatingRepFailsOnlyAroundIndexThree) {
  const auto t = cfg(16);
  const auto inst = q_relation_instances(violating_rep(t.M, 3), t);
  int failures = 0;
  for (const auto& i : inst) {
    if (i.holds()) continue;
    ++failures;
    EXPECT_TRUE(contains(i.support, 3)) << i.identity << " n=" << i.n;
  }
  EXPECT_GT(failures, 0);
  // Dropping y from q-_3 leaves q+_3 q-_3^* = e = q-_3 q+_3^*, so the first relation survives.
  for (const auto& i : inst) {
    if (i.identity == "q1") {
      EXPECT_TRUE(i.holds()) << i.n;
    }
  }
  // The second relation fails at n = 3 with residual 2 c_+(3)^{1/2}.
  for (const auto& i : inst)
    if (i.identity == "q2" && i.n == 3) {
      EXPECT_NEAR(i.residual, 2.0 * t.weight(podles::Leg::plus, 3), 1e-12);
      EXPECT_GE(i.residual, 1.0);
    }
}

TEST(GeneratorIdentities, DefaultRepGenerators) {
  const auto t = cfg(64);
  expect_all_pass(verify_proposition_generators(default_rep(t.M), t));
}

TEST(GeneratorIdentities, WordExamples) {
  const auto rep = default_rep(8);
  const auto z = [&](int n) { return rep.qplus[n - 1] * rep.qplus[n].star(); };
  const auto y0 = rep.qminus[0].star() * rep.qplus[0];
  EXPECT_EQ(y0, GAE::y());
  const auto w = [&](int n) { return rep.qplus[n - 1] * y0 * rep.qplus[n].star(); };
  for (int n = 1; n + 1 < 8; ++n)
    EXPECT_EQ(z(n).star() * w(n) * z(n + 1), GAE(Word::r(n) * Word::y() * Word::r(n + 1, -1)));
  const auto wp = w(1).star() * z(1);
  EXPECT_EQ(wp, GAE(Word::r(1) * Word::y() * Word::r(1, -1)));
  EXPECT_EQ(wp * wp, GAE::identity());
  for (int n = 0; n < 8; ++n) EXPECT_EQ(rep.qminus[n].star() * rep.qplus[n], GAE::y());
}

TEST(GeneratorIdentities, ViolatingRepFailuresTouchIndexThree) {
  const auto inst = proposition_instances(violating_rep(16, 3), 16);
  bool any = false;
  for (const auto& i : inst)
    if (!i.holds()) {
      any = true;
      EXPECT_TRUE(contains(i.support, 3)) << i.identity << " n=" << i.n;
    }
  EXPECT_TRUE(any);
}

TEST(RIdentities, HoldWithRMinusEqualsRPlusY) {
  for (const auto& i : r_identity_instances(64)) ASSERT_TRUE(i.value.is_zero()) << i.identity << " " << i.n;
}

TEST(Corepresentation, UnitaryGroupLikeAndEquivariant) {
  const auto t = cfg(64);
  const auto rep = default_rep(t.M);
  const auto U = build_U(rep, t);
  expect_all_pass(verify_unitarity(U));
  expect_all_pass(verify_corepresentation(U, rep));
  expect_all_pass({verify_commutes_with_dirac(U, podles::build_dirac(t).D)});
}

TEST(Corepresentation, DetectsNonGroupLikeEntries) {
  auto rep = default_rep(6);
  rep.qplus[2] = Complex(0.6) * GAE::r(2) + Complex(0.8) * GAE::y();
  const auto U = build_U(rep, cfg(6));
  bool failed = false;
  for (const auto& r : verify_corepresentation(U, rep)) failed |= r.failed();
  EXPECT_TRUE(failed);
  for (const auto& r : verify_unitarity(U)) EXPECT_TRUE(r.failed());
}

TEST(Corepresentation, DetectsBrokenEquivariance) {
  // A permutation of the basis inside one leg does not commute with D.
  GAOperator U(4);
  for (int i = 0; i < 8; ++i) U.set(i, i, GAE::identity());
  U.set(1, 1, GAE{});
  U.set(2, 2, GAE{});
  U.set(1, 2, GAE::identity());
  U.set(2, 1, GAE::identity());
  EXPECT_TRUE(verify_commutes_with_dirac(U, podles::build_dirac(cfg(4)).D).failed());
}

TEST(Volume, InvariantUnderDefaultRep) {
  const auto t = cfg(16);
  expect_all_pass(verify_volume_invariance(default_rep(t.M), t));
}

TEST(Volume, RankOneExamples) {
  const auto t = cfg(8);
  const auto U = build_U(default_rep(t.M), t);
  const auto xi = [&](int n) {
    podles::Vector v = podles::basis_vector(t.M, podles::Leg::plus, n) + podles::basis_vector(t.M, podles::Leg::minus, n);
    return v;
  };
  // |xi_n><xi_n|/2 is fixed, with coefficient q+_n q+_n^* = e.
  const BlockOperator X(t.M, 0.5 * xi(3) * xi(3).adjoint());
  EXPECT_EQ(max_entry_distance(ad_U(X, U), GAOperator::lift(X)), 0.0);
  EXPECT_EQ(ad_U(X, U).partial_trace(), GAE::identity());
  // Off-diagonal rank one: trace zero.
  const BlockOperator Y(t.M, 0.5 * xi(2) * xi(5).adjoint());
  EXPECT_TRUE(ad_U(Y, U).partial_trace().is_zero());
  EXPECT_EQ(ad_U(Y, U).at(podles::Leg::plus, 2, podles::Leg::plus, 5), Complex(0.5) * GAE(Word::r(2) * Word::r(5, -1)));
}

TEST(OracleAndBlocks, ViolatingRepBreaksBlockStructure) {
  const auto t = cfg(16);
  EXPECT_TRUE(verify_block_preservation(default_rep(t.M), t).passed());
  EXPECT_TRUE(verify_block_preservation(violating_rep(t.M, 3), t).failed());
  EXPECT_TRUE(verify_alpha_tau(default_rep(t.M), t).passed());
}

TEST(Summarize, AggregatesPerIdentity) {
  std::vector<IdentityInstance> inst(3);
  inst[0] = {"a", 0, {0}, GAE{}, 0.0};
  inst[1] = {"a", 1, {1}, GAE::y(), 1.0};
  inst[2] = {"b", 0, {0}, GAE{}, 0.0};
  const auto s = summarize(inst, "t");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].id, "t.a");
  EXPECT_TRUE(s[0].failed());
  EXPECT_EQ(s[0].details, "fails at n = 1");
  EXPECT_EQ(s[0].kind, CheckKind::symbolic);
  EXPECT_TRUE(s[1].passed());
}
