#pragma once

#include <stdexcept>

namespace qiso::podles {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The two summands H_+ and H_- of the Hilbert space.
enum class Leg { plus = 0, minus = 1 };

/// Truncation of l^2(N) (+) l^2(N) to span{e_0, ..., e_{M-1}} on each leg,
/// together with the sphere parameters.
///
/// Shift-type operators lose information at e_{M-1}, so verifications only
/// look at interior vectors e_n with n <= M - buffer.
struct TruncationConfig {
  int M = 32;
  double mu = 0.5;
  double c = 2.0;
  int buffer = 2;

  /// Throws ConfigError unless mu in (0,1), c > 0, M >= 4 and 2 <= buffer < M.
  void validate() const;

  int dim() const { return 2 * M; }
  /// Largest interior basis index.
  int interior_limit() const { return M - buffer; }

  double lambda_plus() const;
  double lambda_minus() const;
  double lambda(Leg leg) const { return leg == Leg::plus ? lambda_plus() : lambda_minus(); }

  /// mu^{2n}
  double mu2n(int n) const;
  /// Eigenvalue lambda_{+/-} mu^{2n} of A on e_n.
  double a_value(Leg leg, int n) const { return lambda(leg) * mu2n(n); }
  /// c_{+/-}(n) = x - x^2 + c with x = lambda_{+/-} mu^{2n}; exactly 0 at n = 0.
  double c_value(Leg leg, int n) const;
  double c_plus(int n) const { return c_value(Leg::plus, n); }
  double c_minus(int n) const { return c_value(Leg::minus, n); }
  /// c_{+/-}(n)^{1/2}, the weight of B on e_n.
  double weight(Leg leg, int n) const;
};

}  // namespace qiso::podles
