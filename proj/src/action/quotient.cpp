#include "qiso/action/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qiso/action/action.hpp"
#include "qiso/action/identities.hpp"
#include "qiso/podles/operators.hpp"

namespace qiso::action {

using freeprod::Syllable;
using podles::Matrix;
using podles::TruncationConfig;

QuotientMorphism::QuotientMorphism(int N) : N_(N) {
  if (N < 0) throw std::invalid_argument("quotient index N must be non-negative");
}

Word QuotientMorphism::operator()(const Word& w) const {
  std::vector<Syllable> kept;
  for (const auto& s : w.syllables())
    if (s.gen.is_y() || s.gen.index() <= static_cast<std::uint32_t>(N_)) kept.push_back(s);
  return Word::reduce(kept);
}

GroupAlgebraElement QuotientMorphism::operator()(const GroupAlgebraElement& a) const {
  GroupAlgebraElement out;
  for (const auto& [w, c] : a.terms()) out.add_term((*this)(w), c);
  return out;
}

GAOperator QuotientMorphism::operator()(const GAOperator& X) const {
  return X.map_entries([this](const GroupAlgebraElement& a) { return (*this)(a); });
}

QuotientMorphism compose(const QuotientMorphism& a, const QuotientMorphism& b) {
  return QuotientMorphism(std::min(a.N(), b.N()));
}

namespace {

using GAE = GroupAlgebraElement;

void require_N(const TruncationConfig& cfg, int N) {
  cfg.validate();
  if (N < 1 || N + 2 >= cfg.M) throw std::invalid_argument("quotient index N must satisfy 1 <= N <= M-3");
}

// (2 lambda_l)^{-1} { lambda_l (1 + x) + lambda_o (1 - x) }
GAE a_coefficient(const TruncationConfig& cfg, Leg leg, const GAE& x) {
  const double ll = cfg.lambda(leg);
  const double lo = cfg.lambda(leg == Leg::plus ? Leg::minus : Leg::plus);
  const auto one = GAE::identity();
  return Complex(1.0 / (2.0 * ll)) * (Complex(ll) * (one + x) + Complex(lo) * (one - x));
}

GAE conj_y(int n) {
  const auto r = GAE::r(static_cast<std::uint32_t>(n));
  return r * GAE::y() * r.star();
}

GAOperator head_sums(const TruncationConfig& cfg, int N, const podles::BlockOperator& A) {
  GAOperator out(cfg.M);
  for (int n = 0; n <= N; ++n) {
    const auto proj = podles::build_projections(cfg, n);
    add_tensor(out, A * proj.P, a_coefficient(cfg, Leg::plus, conj_y(n)));
    add_tensor(out, A * proj.Q, a_coefficient(cfg, Leg::minus, conj_y(n)));
  }
  return out;
}

BlockOperator restricted_function(const BlockOperator& H, const BlockOperator& R, double (*f)(double)) {
  const auto I = BlockOperator::identity(H.M());
  return R * podles::hermitian_function(R * H * R + (I - R), f) * R;
}

BlockOperator tail_projection(const TruncationConfig& cfg, int N, Leg leg) {
  Matrix m = Matrix::Zero(cfg.dim(), cfg.dim());
  for (int n = N + 2; n < cfg.M; ++n) {
    const int i = BlockOperator::index(leg, n, cfg.M);
    m(i, i) = 1.0;
  }
  return BlockOperator(cfg.M, m);
}

// Coefficient operator: entry (i, j) = coefficient of `w` in X_ij, for columns n >= N+2.
BlockOperator tail_coefficients(const GAOperator& X, const Word& w, const TruncationConfig& cfg, int N) {
  Matrix m = Matrix::Zero(cfg.dim(), cfg.dim());
  for (int i = 0; i < X.dim(); ++i)
    for (const auto& [j, v] : X.row(i))
      if (j % cfg.M >= N + 2) m(i, j) = v.coefficient(w);
  return BlockOperator(cfg.M, m);
}

double tail_other_words(const GAOperator& X, const TruncationConfig& cfg, int N) {
  double worst = 0.0;
  for (int i = 0; i < X.dim(); ++i)
    for (const auto& [j, v] : X.row(i))
      if (j % cfg.M >= N + 2)
        for (const auto& [w, c] : v.terms())
          if (!w.is_identity() && w != Word::y()) worst = std::max(worst, std::abs(c));
  return worst;
}

double max_entry(const BlockOperator& X) { return X.matrix().cwiseAbs().maxCoeff(); }

}  // namespace

GAOperator quotient_alpha_A_four_sums(const TruncationConfig& cfg, int N) {
  require_N(cfg, N);
  const auto pi = podles::build_pi(cfg);
  auto out = head_sums(cfg, N, pi.A);
  const auto cp = a_coefficient(cfg, Leg::plus, GAE::y());
  const auto cm = a_coefficient(cfg, Leg::minus, GAE::y());
  for (int n = N + 1; n < cfg.M; ++n) {
    const auto proj = podles::build_projections(cfg, n);
    add_tensor(out, pi.A * proj.P, cp);
    add_tensor(out, pi.A * proj.Q, cm);
  }
  return out;
}

GAOperator quotient_alpha_A_compact(const TruncationConfig& cfg, int N) {
  require_N(cfg, N);
  const auto pi = podles::build_pi(cfg);
  auto out = head_sums(cfg, N, pi.A);
  auto Pt = podles::leg_projection(cfg.M, Leg::plus);
  auto Qt = podles::leg_projection(cfg.M, Leg::minus);
  for (int n = 0; n <= N; ++n) {
    const auto proj = podles::build_projections(cfg, n);
    Pt = Pt - proj.P;
    Qt = Qt - proj.Q;
  }
  add_tensor(out, pi.A * Pt, a_coefficient(cfg, Leg::plus, GAE::y()));
  add_tensor(out, pi.A * Qt, a_coefficient(cfg, Leg::minus, GAE::y()));
  return out;
}

BlockOperator b_tail_series(const TruncationConfig& cfg, int N, Leg leg, int sign) {
  require_N(cfg, N);
  const Leg other = leg == Leg::plus ? Leg::minus : Leg::plus;
  const auto pi = podles::build_pi(cfg);
  auto out = BlockOperator::zero(cfg.M);
  for (int n = N + 2; n < cfg.M; ++n) {
    const auto proj = podles::build_projections(cfg, n);
    const double coef = (cfg.weight(leg, n) + sign * cfg.weight(other, n)) / (2.0 * cfg.c_value(leg, n));
    out = out + (pi.B * (leg == Leg::plus ? proj.P : proj.Q)) * Complex(coef);
  }
  return out;
}

BlockOperator b_tail_functional(const TruncationConfig& cfg, int N, Leg leg, int sign) {
  require_N(cfg, N);
  const Leg other = leg == Leg::plus ? Leg::minus : Leg::plus;
  const auto pi = podles::build_pi(cfg);
  const auto I = BlockOperator::identity(cfg.M);
  const auto F = pi.A - pi.A * pi.A + I * Complex(cfg.c);
  const auto kA = pi.A * Complex(cfg.lambda(other) / cfg.lambda(leg));
  const auto G = kA - kA * kA + I * Complex(cfg.c);
  const auto R = tail_projection(cfg, N, leg);

  const auto Finv_sqrt = restricted_function(F, R, [](double v) { return 1.0 / std::sqrt(v); });
  const auto Finv = restricted_function(F, R, [](double v) { return 1.0 / v; });
  const auto Gsqrt = restricted_function(G, R, [](double v) { return std::sqrt(std::max(v, 0.0)); });
  return pi.B * R * (Finv_sqrt + Finv * Gsqrt * Complex(sign)) * R * Complex(0.5);
}

std::vector<CheckResult> verify_quotient(const TruncationConfig& cfg, int N, double tol) {
  require_N(cfg, N);
  const QuotientMorphism piN(N);
  const auto rep = default_rep(cfg.M);
  const auto U = build_U(rep, cfg);
  const auto pi = podles::build_pi(cfg);
  const auto qa = piN(ad_U(pi.A, U));
  const auto qb = piN(ad_U(pi.B, U));
  const auto qt = piN(ad_U(podles::build_tau(cfg), U));
  const std::string tag = "quotient.N" + std::to_string(N) + ".";
  const int lim = cfg.interior_limit();

  std::vector<CheckResult> out;
  out.push_back(make_check(tag + "alpha_A.four_sums", "(id (x) pi_N) alpha(A) = four-sum closed form",
                           max_entry_distance(qa, quotient_alpha_A_four_sums(cfg, N), lim), tol, CheckKind::numeric));
  out.push_back(make_check(tag + "alpha_A.compact", "(id (x) pi_N) alpha(A) = compact tail form",
                           max_entry_distance(qa, quotient_alpha_A_compact(cfg, N), lim), tol, CheckKind::numeric));

  double series_vs_fc = 0.0;
  for (Leg leg : {Leg::plus, Leg::minus})
    for (int sign : {1, -1})
      series_vs_fc = std::max(
          series_vs_fc, max_entry(b_tail_series(cfg, N, leg, sign) - b_tail_functional(cfg, N, leg, sign)));
  out.push_back(make_check(tag + "alpha_B.tail_functional_calculus",
                           "tail series of B equals its functional-calculus form", series_vs_fc, tol,
                           CheckKind::numeric));

  const auto absB = podles::operator_abs(pi.B);
  const auto expect_e = (b_tail_functional(cfg, N, Leg::plus, 1) + b_tail_functional(cfg, N, Leg::minus, 1)) * absB;
  const auto expect_y = (b_tail_functional(cfg, N, Leg::plus, -1) + b_tail_functional(cfg, N, Leg::minus, -1)) * absB;
  const double tail_action =
      std::max({max_entry(tail_coefficients(qb, Word{}, cfg, N) - expect_e),
                max_entry(tail_coefficients(qb, Word::y(), cfg, N) - expect_y), tail_other_words(qb, cfg, N)});
  out.push_back(make_check(tag + "alpha_B.tail_action",
                           "(id (x) pi_N) alpha(B) on n >= N+2 has coefficients in span{e, y} given by the tail form",
                           tail_action, tol, CheckKind::numeric));

  GAOperator expect_tau(cfg.M);
  const auto tau = podles::build_tau(cfg);
  for (int n = 1; n < cfg.M; ++n) {
    const auto proj = podles::build_projections(cfg, n);
    GAE coef = n <= N ? GAE::r(static_cast<std::uint32_t>(n - 1)) * GAE::r(static_cast<std::uint32_t>(n), -1)
               : n == N + 1 ? GAE::r(static_cast<std::uint32_t>(N))
                            : GAE::identity();
    add_tensor(expect_tau, tau * (proj.P + proj.Q), coef);
  }
  out.push_back(make_check(tag + "alpha_tau", "(id (x) pi_N) alpha(tau): r_{n-1} r_n^*, then r_N, then e",
                           max_entry_distance(qt, expect_tau), kSymbolicTolerance, CheckKind::symbolic));
  return out;
}

}  // namespace qiso::action
