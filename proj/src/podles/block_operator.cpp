#include "qiso/podles/block_operator.hpp"

#include <stdexcept>
#include <cmath>

namespace qiso::podles {

BlockOperator::BlockOperator(int M) : M_(M), m_(Matrix::Zero(2 * M, 2 * M)) {}

BlockOperator::BlockOperator(int M, Matrix full) : M_(M), m_(std::move(full)) {
  if (m_.rows() != 2 * M || m_.cols() != 2 * M) throw std::invalid_argument("BlockOperator: matrix is not 2M x 2M");
}

BlockOperator BlockOperator::identity(int M) { return BlockOperator(M, Matrix::Identity(2 * M, 2 * M)); }

BlockOperator BlockOperator::from_legs(const Matrix& plus, const Matrix& minus) {
  const auto M = static_cast<int>(plus.rows());
  const Matrix zero = Matrix::Zero(M, M);
  return from_blocks(plus, zero, zero, minus);
}

BlockOperator BlockOperator::from_blocks(const Matrix& pp, const Matrix& pm, const Matrix& mp, const Matrix& mm) {
  const auto M = static_cast<int>(pp.rows());
  BlockOperator out(M);
  out.m_.topLeftCorner(M, M) = pp;
  out.m_.topRightCorner(M, M) = pm;
  out.m_.bottomLeftCorner(M, M) = mp;
  out.m_.bottomRightCorner(M, M) = mm;
  return out;
}

Matrix BlockOperator::block(Leg row, Leg col) const {
  return m_.block(index(row, 0), index(col, 0), M_, M_);
}

BlockOperator& BlockOperator::operator+=(const BlockOperator& o) {
  m_ += o.m_;
  return *this;
}

BlockOperator& BlockOperator::operator-=(const BlockOperator& o) {
  m_ -= o.m_;
  return *this;
}

BlockOperator operator*(const BlockOperator& a, const BlockOperator& b) {
  return BlockOperator(a.M_, a.m_ * b.m_);
}

double BlockOperator::off_diagonal_norm() const {
  return std::hypot(m_.topRightCorner(M_, M_).norm(), m_.bottomLeftCorner(M_, M_).norm());
}

Vector basis_vector(int M, Leg leg, int n) {
  Vector v = Vector::Zero(2 * M);
  v(BlockOperator::index(leg, n, M)) = 1.0;
  return v;
}

double operator_norm(const Matrix& X) {
  if (X.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(X);
  return svd.singularValues()(0);
}

namespace {

Matrix interior_columns(const BlockOperator& X, const TruncationConfig& cfg) {
  const int last = cfg.interior_limit();
  const int M = X.M();
  Matrix cols(X.dim(), 2 * (last + 1));
  for (int n = 0; n <= last; ++n) {
    cols.col(n) = X.matrix().col(n);
    cols.col(last + 1 + n) = X.matrix().col(M + n);
  }
  return cols;
}

}  // namespace

double interior_norm(const BlockOperator& X, const TruncationConfig& cfg) {
  return operator_norm(interior_columns(X, cfg));
}

double interior_max_entry(const BlockOperator& X, const TruncationConfig& cfg) {
  return interior_columns(X, cfg).cwiseAbs().maxCoeff();
}

}  // namespace qiso::podles
