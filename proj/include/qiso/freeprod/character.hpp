#pragma once

#include <functional>
#include <map>
#include <stdexcept>

#include "qiso/freeprod/group_algebra.hpp"

namespace qiso::freeprod {

class MissingGeneratorError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Unital *-homomorphism C[Z_2 * Z^inf] -> C, fixed by its values on generators.
///
/// y is sent to +1 or -1. Each r_k is sent to a unit complex number, either
/// from the explicit table or, failing that, from the tail rule.
class Character {
 public:
  using TailRule = std::function<Complex(std::uint32_t)>;

  explicit Character(Complex y_value = 1.0, std::map<std::uint32_t, Complex> r_values = {},
                     TailRule tail = {});

  Complex y_value() const { return y_value_; }
  Complex value(Generator g) const;
  Complex evaluate(const Word& w) const;
  Complex evaluate(const GroupAlgebraElement& a) const;

 private:
  Complex y_value_;
  std::map<std::uint32_t, Complex> r_values_;
  TailRule tail_;
};

inline Complex evaluate(const Character& chi, const GroupAlgebraElement& a) { return chi.evaluate(a); }

/// exp(2 pi i turns). Quarter turns are returned exactly.
Complex unit_phase(double turns);

/// Character with y -> 1 and r_n -> exp(-pi i n(n+1) theta), so that
/// r_{n-1} r_n^{-1} -> exp(2 pi i n theta) for every n >= 1.
Character make_phi(double theta);

/// lambda_n = exp(2 pi i n theta), the value of make_phi(theta) on r_{n-1} r_n^{-1}.
Complex phi_lambda(double theta, std::uint32_t n);

/// Every generator to 1 (the counit).
Character trivial_character();

}  // namespace qiso::freeprod
