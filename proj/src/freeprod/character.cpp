#include "qiso/freeprod/character.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qiso::freeprod {

namespace {

constexpr double kUnitTolerance = 1e-12;

void require_unit(Complex z, const std::string& what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(std::abs(z) - 1.0) > kUnitTolerance)
    throw std::invalid_argument(what + " must have modulus 1");
}

Complex unit_power(Complex z, std::int64_t exp) {
  if (exp < 0) {
    z = std::conj(z);
    exp = -exp;
  }
  Complex result = 1.0;
  while (exp > 0) {
    if (exp & 1) result *= z;
    z *= z;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Character::Character(Complex y_value, std::map<std::uint32_t, Complex> r_values, TailRule tail)
    : y_value_(y_value), r_values_(std::move(r_values)), tail_(std::move(tail)) {
  require_unit(y_value_, "character value of y");
  if (std::abs(y_value_ * y_value_ - 1.0) > kUnitTolerance)
    throw std::invalid_argument("character value of y must square to 1");
  for (const auto& [k, v] : r_values_) require_unit(v, "character value of r" + std::to_string(k));
}

Complex Character::value(Generator g) const {
  if (g.is_y()) return y_value_;
  if (auto it = r_values_.find(g.index()); it != r_values_.end()) return it->second;
  if (tail_) return tail_(g.index());
  throw MissingGeneratorError("character has no value for r" + std::to_string(g.index()));
}

Complex Character::evaluate(const Word& w) const {
  Complex out = 1.0;
  for (const auto& s : w.syllables()) out *= unit_power(value(s.gen), s.exp);
  return out;
}

Complex Character::evaluate(const GroupAlgebraElement& a) const {
  Complex out = 0.0;
  for (const auto& [w, c] : a.terms()) out += c * evaluate(w);
  return out;
}

Complex unit_phase(double turns) {
  double frac = turns - std::floor(turns);
  const double quarters = frac * 4.0;
  if (quarters == std::floor(quarters)) {
    switch (static_cast<int>(quarters) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * frac;
  return {std::cos(angle), std::sin(angle)};
}

Character make_phi(double theta) {
  return Character(1.0, {}, [theta](std::uint32_t n) {
    // n(n+1)/2 is an integer, so the reduction mod 1 loses nothing for dyadic theta.
    const auto half = static_cast<double>(static_cast<std::uint64_t>(n) * (n + 1) / 2);
    return unit_phase(-half * theta);
  });
}

Complex phi_lambda(double theta, std::uint32_t n) { return unit_phase(static_cast<double>(n) * theta); }

Character trivial_character() {
  return Character(1.0, {}, [](std::uint32_t) { return Complex(1.0); });
}

}  // namespace qiso::freeprod
