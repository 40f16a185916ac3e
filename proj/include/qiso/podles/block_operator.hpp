#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "qiso/podles/truncation.hpp"

namespace qiso::podles {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Operator on the truncated H_+ (+) H_-, stored densely as a 2M x 2M matrix.
/// Basis index of (leg, n) is n for the plus leg and M + n for the minus leg.
class BlockOperator {
 public:
  explicit BlockOperator(int M);
  BlockOperator(int M, Matrix full);

  static BlockOperator zero(int M) { return BlockOperator(M); }
  static BlockOperator identity(int M);
  static BlockOperator from_legs(const Matrix& plus, const Matrix& minus);
  static BlockOperator from_blocks(const Matrix& pp, const Matrix& pm, const Matrix& mp, const Matrix& mm);

  static int index(Leg leg, int n, int M) { return leg == Leg::plus ? n : M + n; }
  int index(Leg leg, int n) const { return index(leg, n, M_); }

  int M() const { return M_; }
  int dim() const { return 2 * M_; }
  const Matrix& matrix() const { return m_; }
  Matrix& matrix() { return m_; }

  Matrix block(Leg row, Leg col) const;
  Complex operator()(Leg row_leg, int row, Leg col_leg, int col) const {
    return m_(index(row_leg, row), index(col_leg, col));
  }
  Complex& operator()(Leg row_leg, int row, Leg col_leg, int col) {
    return m_(index(row_leg, row), index(col_leg, col));
  }

  BlockOperator adjoint() const { return BlockOperator(M_, m_.adjoint()); }

  BlockOperator& operator+=(const BlockOperator& o);
  BlockOperator& operator-=(const BlockOperator& o);
  friend BlockOperator operator+(BlockOperator a, const BlockOperator& b) { return a += b; }
  friend BlockOperator operator-(BlockOperator a, const BlockOperator& b) { return a -= b; }
  friend BlockOperator operator*(const BlockOperator& a, const BlockOperator& b);
  friend BlockOperator operator*(Complex s, BlockOperator a) {
    a.m_ *= s;
    return a;
  }
  friend BlockOperator operator*(BlockOperator a, Complex s) { return s * std::move(a); }

  /// Frobenius norm of the (+,-) and (-,+) blocks.
  double off_diagonal_norm() const;
  bool is_block_diagonal() const { return off_diagonal_norm() == 0.0; }

 private:
  int M_;
  Matrix m_;
};

Vector basis_vector(int M, Leg leg, int n);

/// Largest singular value.
double operator_norm(const Matrix& X);

/// Operator norm of X restricted to span{e_n : n <= M - buffer} on both legs.
double interior_norm(const BlockOperator& X, const TruncationConfig& cfg);

/// Largest |entry| of X over interior columns.
double interior_max_entry(const BlockOperator& X, const TruncationConfig& cfg);

}  // namespace qiso::podles
