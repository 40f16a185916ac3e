#include "qiso/podles/commutant.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace qiso::podles {

namespace {

constexpr double kMatchTolerance = 1e-13;
// Eigenvalues of H closer than this (relative to its spectral radius) share a
// block. Merging is always safe: it only enlarges the search space.
constexpr double kClusterTolerance = 1e-8;

bool is_scalar(const Matrix& T) {
  const Complex t = T.trace() / static_cast<double>(T.rows());
  const Matrix diff = T - t * Matrix::Identity(T.rows(), T.cols());
  return diff.norm() <= kMatchTolerance * std::max(1.0, T.norm());
}

bool is_star_closed(const std::vector<Matrix>& gens) {
  for (const auto& T : gens) {
    const Matrix Ts = T.adjoint();
    const double tol = kMatchTolerance * std::max(1.0, T.norm());
    const bool found = std::any_of(gens.begin(), gens.end(), [&](const Matrix& S) { return (S - Ts).norm() <= tol; });
    if (!found) return false;
  }
  return true;
}

// Accumulates the R factor of a tall stacked system so memory stays at one
// block of equations plus a K x K triangle.
class StackedSystem {
 public:
  explicit StackedSystem(Eigen::Index unknowns) : K_(unknowns), R_(0, unknowns) {}

  void add(const Matrix& rows) {
    equations_ += static_cast<std::size_t>(rows.rows());
    Matrix stacked(R_.rows() + rows.rows(), K_);
    stacked << R_, rows;
    if (stacked.rows() <= K_) {
      R_ = std::move(stacked);
      return;
    }
    Eigen::HouseholderQR<Matrix> qr(stacked);
    R_ = qr.matrixQR().topRows(K_).triangularView<Eigen::Upper>();
  }

  std::size_t equations() const { return equations_; }

  CommutantResult finish(double relative_cutoff) const {
    CommutantResult out;
    out.unknowns = static_cast<std::size_t>(K_);
    out.equations = equations_;
    Eigen::VectorXd sv;
    if (R_.rows() > 0) sv = Eigen::BDCSVD<Matrix>(R_).singularValues();
    // Unknowns beyond the number of independent rows are null automatically.
    std::size_t null = static_cast<std::size_t>(K_ - sv.size());
    out.sigma_max = sv.size() > 0 ? sv.maxCoeff() : 0.0;
    const double cutoff = relative_cutoff * out.sigma_max;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (out.sigma_max == 0.0 || sv(i) <= cutoff) {
        ++null;
        out.largest_null_sigma = std::max(out.largest_null_sigma, sv(i));
      } else if (out.smallest_retained_sigma == 0.0 || sv(i) < out.smallest_retained_sigma) {
        out.smallest_retained_sigma = sv(i);
      }
    }
    out.dimension = null;
    return out;
  }

 private:
  Eigen::Index K_;
  Matrix R_;
  std::size_t equations_ = 0;
};

CommutantResult dense_route(const std::vector<Matrix>& gens, Eigen::Index n, double cutoff) {
  const Eigen::Index K = n * n;
  StackedSystem system(K);
  const Matrix I = Matrix::Identity(n, n);
  for (const auto& T : gens) {
    // vec(XT - TX) = (T^T (x) I - I (x) T) vec(X), column-major vec.
    Matrix L = Matrix::Zero(K, K);
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b) {
        L.block(a * n, b * n, n, n) += T(b, a) * I;
        if (a == b) L.block(a * n, b * n, n, n) -= T;
      }
    system.add(L);
  }
  auto out = system.finish(cutoff);
  out.route = "dense";
  return out;
}

CommutantResult reduced_route(const std::vector<Matrix>& gens, Eigen::Index n, const CommutantOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal;
  Matrix H = Matrix::Zero(n, n);
  const Complex i(0.0, 1.0);
  for (const auto& T : gens) {
    const double scale = 1.0 / T.norm();
    const double a = normal(rng);
    const double b = normal(rng);
    H += scale * (a * (T + T.adjoint()) + b * i * (T - T.adjoint()));
  }
  H = 0.5 * (H + H.adjoint()).eval();

  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  if (es.info() != Eigen::Success) throw std::runtime_error("commutant: eigensolver failed");
  const auto& values = es.eigenvalues();
  const Matrix& V = es.eigenvectors();

  const double radius = std::max(values.cwiseAbs().maxCoeff(), 1e-300);
  std::vector<std::vector<Eigen::Index>> clusters;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (clusters.empty() || values(k) - values(k - 1) > kClusterTolerance * radius) clusters.emplace_back();
    clusters.back().push_back(k);
  }

  // Unknown u <-> matrix unit E_{p r} of the eigenbasis, p and r in one cluster.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> units;
  for (const auto& cl : clusters)
    for (auto p : cl)
      for (auto r : cl) units.emplace_back(p, r);
  const auto K = static_cast<Eigen::Index>(units.size());

  StackedSystem system(K);
  for (const auto& T : gens) {
    const Matrix Tp = V.adjoint() * T * V;
    Matrix L = Matrix::Zero(n * n, K);
    for (Eigen::Index u = 0; u < K; ++u) {
      const auto [p, r] = units[static_cast<std::size_t>(u)];
      // vec(E_pr T' - T' E_pr): row p of the first term is row r of T',
      // column r of the second is column p of T'.
      for (Eigen::Index j = 0; j < n; ++j) L(p + j * n, u) += Tp(r, j);
      for (Eigen::Index k = 0; k < n; ++k) L(k + r * n, u) -= Tp(k, p);
    }
    system.add(L);
  }
  auto out = system.finish(opts.relative_cutoff);
  out.route = "reduced";
  return out;
}

}  // namespace

CommutantResult commutant(std::span<const BlockOperator> generators, const CommutantOptions& opts) {
  if (generators.empty()) throw std::invalid_argument("commutant: no generators");
  const Eigen::Index n = generators.front().dim();
  std::vector<Matrix> active;
  for (const auto& g : generators) {
    if (g.dim() != n) throw std::invalid_argument("commutant: generator dimensions differ");
    if (!is_scalar(g.matrix())) active.push_back(g.matrix());
  }
  if (active.empty()) {
    CommutantResult out;
    out.dimension = out.unknowns = static_cast<std::size_t>(n * n);
    out.route = "scalar";
    return out;
  }
  if (!opts.force_dense && is_star_closed(active)) return reduced_route(active, n, opts);
  return dense_route(active, n, opts.relative_cutoff);
}

}  // namespace qiso::podles
