#include "qiso/podles/truncation.hpp"

#include <cmath>
#include <string>

namespace qiso::podles {

void TruncationConfig::validate() const {
  if (!(std::isfinite(mu) && mu > 0.0 && mu < 1.0))
    throw ConfigError("mu must lie in (0,1), got " + std::to_string(mu));
  if (!(std::isfinite(c) && c > 0.0)) throw ConfigError("c must be > 0, got " + std::to_string(c));
  if (M < 4) throw ConfigError("truncation M must be >= 4, got " + std::to_string(M));
  if (buffer < 2 || buffer >= M) throw ConfigError("boundary buffer must satisfy 2 <= b < M");
}

double TruncationConfig::lambda_plus() const { return 0.5 + std::sqrt(c + 0.25); }

double TruncationConfig::lambda_minus() const { return 0.5 - std::sqrt(c + 0.25); }

double TruncationConfig::mu2n(int n) const { return std::pow(mu, 2.0 * n); }

double TruncationConfig::c_value(Leg leg, int n) const {
  // x - x^2 + c = (lambda_+ - x)(x - lambda_-), and x = lambda mu^{2n} makes one
  // factor a multiple of (1 - mu^{2n}).
  const double one_minus = -std::expm1(2.0 * n * std::log(mu));
  const double lp = lambda_plus();
  const double lm = lambda_minus();
  const double x = a_value(leg, n);
  if (leg == Leg::plus) return lp * one_minus * (x - lm);
  return (lp - x) * (-lm) * one_minus;
}

double TruncationConfig::weight(Leg leg, int n) const { return std::sqrt(c_value(leg, n)); }

}  // namespace qiso::podles
