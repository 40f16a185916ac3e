#include "qiso/action/action.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qiso/podles/operators.hpp"

namespace qiso::action {

using podles::TruncationConfig;

namespace {

const GroupAlgebraElement& q(const std::vector<GroupAlgebraElement>& v, int n) {
  return v.at(static_cast<std::size_t>(n));
}

void require_size(const EquivariantRep& rep, const TruncationConfig& cfg) {
  if (rep.size() < cfg.M || static_cast<int>(rep.qminus.size()) < cfg.M)
    throw std::invalid_argument("equivariant representation shorter than the truncation");
}

}  // namespace

GAOperator build_U(const EquivariantRep& rep, const TruncationConfig& cfg) {
  require_size(rep, cfg);
  GAOperator U(cfg.M);
  for (int n = 0; n < cfg.M; ++n) {
    const auto sum = Complex(0.5) * (q(rep.qplus, n) + q(rep.qminus, n));
    const auto diff = Complex(0.5) * (q(rep.qplus, n) - q(rep.qminus, n));
    U.add(Leg::plus, n, Leg::plus, n, sum);
    U.add(Leg::plus, n, Leg::minus, n, diff);
    U.add(Leg::minus, n, Leg::plus, n, diff);
    U.add(Leg::minus, n, Leg::minus, n, sum);
  }
  return U;
}

GAOperator ad_U(const BlockOperator& x, const GAOperator& U) { return U * GAOperator::lift(x) * U.adjoint(); }

void add_tensor(GAOperator& target, const BlockOperator& X, const GroupAlgebraElement& coef) {
  if (coef.is_zero()) return;
  for (int i = 0; i < X.dim(); ++i)
    for (int j = 0; j < X.dim(); ++j)
      if (const Complex v = X.matrix()(i, j); v != Complex(0.0)) target.add(i, j, v * coef);
}

GAOperator closed_form_alpha_A(const EquivariantRep& rep, const TruncationConfig& cfg) {
  require_size(rep, cfg);
  const auto pi = podles::build_pi(cfg);
  const double lp = cfg.lambda_plus();
  const double lm = cfg.lambda_minus();
  const auto one = GroupAlgebraElement::identity();
  GAOperator out(cfg.M);
  for (int n = 0; n < cfg.M; ++n) {
    const auto x = q(rep.qplus, n) * q(rep.qminus, n).star();
    const auto a_plus = Complex(1.0 / (2.0 * lp)) * (Complex(lp) * (one + x) + Complex(lm) * (one - x));
    const auto a_minus = Complex(1.0 / (2.0 * lm)) * (Complex(lp) * (one - x) + Complex(lm) * (one + x));
    const auto proj = podles::build_projections(cfg, n);
    add_tensor(out, pi.A * proj.P, a_plus);
    add_tensor(out, pi.A * proj.Q, a_minus);
  }
  return out;
}

GAOperator closed_form_alpha_B(const EquivariantRep& rep, const TruncationConfig& cfg) {
  require_size(rep, cfg);
  const auto pi = podles::build_pi(cfg);
  GAOperator out(cfg.M);
  for (int n = 1; n < cfg.M; ++n) {
    const double cp = cfg.c_plus(n);
    const double cm = cfg.c_minus(n);
    if (cp == 0.0 || cm == 0.0)
      throw std::domain_error("c_+/-(" + std::to_string(n) + ") vanishes; closed form for alpha(B) undefined");
    const double sp = std::sqrt(cp);
    const double sm = std::sqrt(cm);
    const auto& qp0 = q(rep.qplus, n - 1);
    const auto& qm0 = q(rep.qminus, n - 1);
    const auto qp1s = q(rep.qplus, n).star();
    const auto qm1s = q(rep.qminus, n).star();
    const auto X = qp0 * qp1s + qm0 * qm1s;
    const auto Y = qm0 * qp1s + qp0 * qm1s;
    const auto b_plus = Complex(1.0 / (4.0 * sp)) * (Complex(sp + sm) * X + Complex(sp - sm) * Y);
    const auto b_minus = Complex(1.0 / (4.0 * sm)) * (Complex(sp + sm) * X - Complex(sp - sm) * Y);
    const auto proj = podles::build_projections(cfg, n);
    add_tensor(out, pi.B * proj.P, b_plus);
    add_tensor(out, pi.B * proj.Q, b_minus);
  }
  return out;
}

GAOperator alpha_tau(const EquivariantRep& rep, const TruncationConfig& cfg) {
  require_size(rep, cfg);
  const auto tau = podles::build_tau(cfg);
  GAOperator out(cfg.M);
  for (int n = 1; n < cfg.M; ++n) {
    const auto proj = podles::build_projections(cfg, n);
    add_tensor(out, tau * (proj.P + proj.Q), q(rep.qplus, n - 1) * q(rep.qplus, n).star());
  }
  return out;
}

}  // namespace qiso::action
