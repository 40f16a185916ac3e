#include "qiso/action/identities.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "qiso/podles/operators.hpp"

namespace qiso::action {

using podles::TruncationConfig;

namespace {

using GAE = GroupAlgebraElement;

IdentityInstance make_instance(std::string name, int n, std::vector<int> support, GAE value) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  IdentityInstance inst{std::move(name), n, std::move(support), std::move(value), 0.0};
  inst.residual = inst.value.max_abs_coefficient();
  return inst;
}

const GAE& at(const std::vector<GAE>& v, int n) { return v.at(static_cast<std::size_t>(n)); }

std::string join_failures(const std::vector<int>& ns) {
  std::ostringstream os;
  os << "fails at n =";
  const std::size_t shown = std::min<std::size_t>(ns.size(), 12);
  for (std::size_t i = 0; i < shown; ++i) os << ' ' << ns[i];
  if (ns.size() > shown) os << " ... (" << ns.size() << " total)";
  return os.str();
}

}  // namespace

std::vector<IdentityInstance> q_relation_instances(const EquivariantRep& rep, const TruncationConfig& cfg) {
  cfg.validate();
  if (rep.size() < cfg.M) throw std::invalid_argument("equivariant representation shorter than the truncation");
  const auto& qp = rep.qplus;
  const auto& qm = rep.qminus;
  std::vector<IdentityInstance> out;

  for (int n = 0; n < cfg.M; ++n)
    out.push_back(make_instance("q1", n, {n}, at(qp, n) * at(qm, n).star() - at(qm, n) * at(qp, n).star()));

  for (int n = 1; n < cfg.M; ++n) {
    const Complex sum(cfg.weight(Leg::plus, n) + cfg.weight(Leg::minus, n));
    const Complex diff(cfg.weight(Leg::plus, n) - cfg.weight(Leg::minus, n));
    const auto same = at(qp, n - 1) * at(qp, n).star() - at(qm, n - 1) * at(qm, n).star();
    const auto cross = at(qp, n - 1) * at(qm, n).star() - at(qm, n - 1) * at(qp, n).star();
    out.push_back(make_instance("q2", n, {n - 1, n}, sum * same + diff * cross));
    out.push_back(make_instance("q3", n, {n - 1, n}, sum * same - diff * cross));
  }

  for (int n = 0; n + 1 < cfg.M; ++n) {
    const Complex sum(cfg.weight(Leg::plus, n + 1) + cfg.weight(Leg::minus, n + 1));
    const Complex diff(cfg.weight(Leg::plus, n + 1) - cfg.weight(Leg::minus, n + 1));
    const auto same = at(qp, n + 1) * at(qp, n).star() - at(qm, n + 1) * at(qm, n).star();
    const auto cross = at(qm, n + 1) * at(qp, n).star() - at(qp, n + 1) * at(qm, n).star();
    out.push_back(make_instance("q4", n, {n, n + 1}, sum * same - diff * cross));
  }
  return out;
}

std::vector<IdentityInstance> proposition_instances(const EquivariantRep& rep, int M) {
  if (M < 2 || rep.size() < M) throw std::invalid_argument("proposition_instances: need at least two indices");
  const auto& qp = rep.qplus;
  const auto& qm = rep.qminus;
  const auto one = GAE::identity();
  const auto yn = [&](int n) { return at(qm, n).star() * at(qp, n); };
  const auto zn = [&](int n) { return at(qp, n - 1) * at(qp, n).star(); };
  const auto wn = [&](int n) { return at(qp, n - 1) * yn(0) * at(qp, n).star(); };

  std::vector<IdentityInstance> out;
  for (int n = 0; n < M; ++n) {
    const auto y = yn(n);
    out.push_back(make_instance("y_self_adjoint", n, {n}, y - y.star()));
    out.push_back(make_instance("y_unitary", n, {n}, y * y.star() - one));
  }
  for (int n = 1; n < M; ++n) {
    out.push_back(make_instance("y_constant", n, {n - 1, n}, yn(n) - yn(n - 1)));
    out.push_back(make_instance("q_minus_from_y", n, {n - 1, n}, at(qm, n) - at(qp, n) * yn(n - 1)));
    out.push_back(make_instance("z_star_w", n, {0, n - 1, n}, zn(n).star() * wn(n) - at(qp, n) * at(qm, n).star()));
  }
  for (int n = 1; n + 1 < M; ++n)
    out.push_back(make_instance("w_recursion", n, {0, n - 1, n, n + 1}, wn(n + 1) - zn(n).star() * wn(n) * zn(n + 1)));

  const auto wp = wn(1).star() * zn(1);
  out.push_back(make_instance("w_prime_self_adjoint", 1, {0, 1}, wp - wp.star()));
  out.push_back(make_instance("w_prime_unitary", 1, {0, 1}, wp * wp.star() - one));
  out.push_back(make_instance("q0_from_w1_z1", 0, {0, 1}, at(qp, 0) * at(qm, 0).star() - wn(1) * zn(1).star()));
  return out;
}

std::vector<IdentityInstance> r_identity_instances(int M) {
  const auto rp = [](int n) { return GAE::r(static_cast<std::uint32_t>(n)); };
  const auto rm = [&](int n) { return rp(n) * GAE::y(); };
  std::vector<IdentityInstance> out;
  for (int n = 0; n < M; ++n)
    out.push_back(make_instance("r_same_index", n, {n}, rp(n) * rm(n).star() - rm(n) * rp(n).star()));
  for (int n = 1; n < M; ++n) {
    out.push_back(make_instance("r_cross_down", n, {n - 1, n}, rp(n - 1) * rm(n).star() - rm(n - 1) * rp(n).star()));
    out.push_back(make_instance("r_same_down", n, {n - 1, n}, rp(n - 1) * rp(n).star() - rm(n - 1) * rm(n).star()));
    out.push_back(make_instance("r_cross_up", n, {n - 1, n}, rm(n) * rp(n - 1).star() - rp(n) * rm(n - 1).star()));
    out.push_back(make_instance("r_same_up", n, {n - 1, n}, rp(n) * rp(n - 1).star() - rm(n) * rm(n - 1).star()));
  }
  return out;
}

std::vector<CheckResult> summarize(const std::vector<IdentityInstance>& instances, const std::string& prefix,
                                   double tol) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<double, std::vector<int>>> agg;
  for (const auto& inst : instances) {
    auto [it, fresh] = agg.try_emplace(inst.identity, 0.0, std::vector<int>{});
    if (fresh) order.push_back(inst.identity);
    it->second.first = std::max(it->second.first, inst.residual);
    if (!inst.holds(tol)) it->second.second.push_back(inst.n);
  }
  std::vector<CheckResult> out;
  for (const auto& name : order) {
    const auto& [res, fails] = agg.at(name);
    out.push_back(make_check(prefix + "." + name, name, res, tol, CheckKind::symbolic,
                             fails.empty() ? std::string{} : join_failures(fails)));
  }
  return out;
}

std::vector<CheckResult> verify_q_relations(const EquivariantRep& rep, const TruncationConfig& cfg) {
  return summarize(q_relation_instances(rep, cfg), "action.q_relation");
}

std::vector<CheckResult> verify_proposition_generators(const EquivariantRep& rep, const TruncationConfig& cfg) {
  cfg.validate();
  return summarize(proposition_instances(rep, cfg.M), "action.generators");
}

std::vector<CheckResult> verify_unitarity(const GAOperator& U) {
  const auto I = GAOperator::identity(U.M());
  const auto Ustar = U.adjoint();
  return {
      make_check("action.unitary.UUstar", "U U* = 1", max_entry_distance(U * Ustar, I), kSymbolicTolerance,
                 CheckKind::symbolic),
      make_check("action.unitary.UstarU", "U* U = 1", max_entry_distance(Ustar * U, I), kSymbolicTolerance,
                 CheckKind::symbolic),
  };
}

CheckResult verify_commutes_with_dirac(const GAOperator& U, const BlockOperator& D) {
  const auto lifted = GAOperator::lift(D);
  return make_check("action.commutes_with_D", "U (D (x) 1) = (D (x) 1) U",
                    max_entry_distance(U * lifted, lifted * U), kSymbolicTolerance, CheckKind::symbolic);
}

std::vector<CheckResult> verify_corepresentation(const GAOperator& U, const EquivariantRep& rep) {
  double corep = 0.0;
  for (int i = 0; i < U.dim(); ++i) {
    std::map<int, freeprod::TensorElement> rhs;
    for (const auto& [k, uik] : U.row(i))
      for (const auto& [j, ukj] : U.row(k)) rhs[j] += freeprod::tensor(uik, ukj);
    for (const auto& [j, uij] : U.row(i)) rhs.try_emplace(j);
    for (const auto& [j, t] : rhs) corep = std::max(corep, freeprod::distance(freeprod::coproduct(U.at(i, j)), t));
  }

  double grouplike = 0.0;
  const auto check = [&](const GAE& q) {
    grouplike = std::max(grouplike, freeprod::distance(freeprod::coproduct(q), freeprod::tensor(q, q)));
  };
  check(GAE::y());
  for (int n = 0; n < rep.size(); ++n) {
    check(at(rep.qplus, n));
    check(at(rep.qminus, n));
    check(at(rep.qminus, n).star() * at(rep.qplus, n));
  }
  return {
      make_check("action.corepresentation", "Delta(U_ij) = sum_k U_ik (x) U_kj", corep, kSymbolicTolerance,
                 CheckKind::symbolic),
      make_check("action.grouplike", "Delta(q) = q (x) q for q+-_n, y, y_n", grouplike, kSymbolicTolerance,
                 CheckKind::symbolic),
  };
}

std::vector<CheckResult> verify_volume_invariance(const EquivariantRep& rep, const TruncationConfig& cfg) {
  cfg.validate();
  const auto U = build_U(rep, cfg);
  const auto Ustar = U.adjoint();
  const int M = cfg.M;

  double worst = 0.0;
  std::string where;
  // xi = (e_n, s e_n), eta = (e_m, t e_m); X = |xi><eta| / 2, Tr X = delta_nm (1 + s t) / 2.
  for (int n = 0; n < M; ++n)
    for (int s : {1, -1})
      for (int m = 0; m < M; ++m)
        for (int t : {1, -1}) {
          GAOperator X(M);
          for (Leg a : {Leg::plus, Leg::minus})
            for (Leg b : {Leg::plus, Leg::minus}) {
              const double xa = a == Leg::plus ? 1.0 : s;
              const double eb = b == Leg::plus ? 1.0 : t;
              X.add(a, n, b, m, GAE(Complex(0.5 * xa * eb)));
            }
          const auto traced = (U * X * Ustar).partial_trace();
          const double tr = n == m ? 0.5 * (1.0 + s * t) : 0.0;
          const double d = freeprod::distance(traced, GAE(Complex(tr)));
          if (d > worst) {
            worst = d;
            std::ostringstream os;
            os << "worst pair n=" << n << " s=" << s << " m=" << m << " t=" << t;
            where = os.str();
          }
        }

  const auto identity_image = (U * Ustar).partial_trace();
  const double id_res = freeprod::distance(identity_image, GAE(Complex(2.0 * M)));
  return {
      make_check("volume.rank_one", "(Tr (x) id) ad_U(X) = Tr(X) 1 for D-eigenvector rank-one X", worst,
                 kSymbolicTolerance, CheckKind::symbolic, worst > kSymbolicTolerance ? where : std::string{}),
      make_check("volume.identity", "(Tr (x) id) ad_U(1) = 2M", id_res, kSymbolicTolerance, CheckKind::symbolic),
  };
}

std::vector<CheckResult> verify_oracle_equivalence(const EquivariantRep& rep, const TruncationConfig& cfg,
                                                   double tol) {
  const auto pi = podles::build_pi(cfg);
  const auto U = build_U(rep, cfg);
  const double da = max_entry_distance(ad_U(pi.A, U), closed_form_alpha_A(rep, cfg));
  const double db = max_entry_distance(ad_U(pi.B, U), closed_form_alpha_B(rep, cfg));
  return {
      make_check("action.alpha_A.closed_form", "ad_U(A) = sum A P_n (x) a+_n + A Q_n (x) a-_n", da, tol,
                 CheckKind::numeric),
      make_check("action.alpha_B.closed_form", "ad_U(B) = sum B P_n (x) b+_n + B Q_n (x) b-_n", db, tol,
                 CheckKind::numeric),
  };
}

CheckResult verify_block_preservation(const EquivariantRep& rep, const TruncationConfig& cfg) {
  const auto pi = podles::build_pi(cfg);
  const auto U = build_U(rep, cfg);
  double worst = 0.0;
  for (const auto* x : {&pi.A, &pi.B}) {
    const auto img = ad_U(*x, U);
    for (int i = 0; i < img.dim(); ++i)
      for (const auto& [j, v] : img.row(i))
        if ((i < cfg.M) != (j < cfg.M)) worst = std::max(worst, v.max_abs_coefficient());
  }
  return make_check("action.block_diagonal", "ad_U(A), ad_U(B) have no H_+ <-> H_- entries", worst,
                    kSymbolicTolerance, CheckKind::symbolic);
}

CheckResult verify_alpha_tau(const EquivariantRep& rep, const TruncationConfig& cfg) {
  const auto U = build_U(rep, cfg);
  const double d = max_entry_distance(ad_U(podles::build_tau(cfg), U), alpha_tau(rep, cfg));
  return make_check("action.alpha_tau", "ad_U(tau) = sum tau (P_n + Q_n) (x) q+_{n-1} q+_n^*", d,
                    kSymbolicTolerance, CheckKind::symbolic);
}

}  // namespace qiso::action
