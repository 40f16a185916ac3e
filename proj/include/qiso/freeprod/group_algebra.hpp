#pragma once

#include <complex>
#include <map>
#include <utility>

#include "qiso/freeprod/word.hpp"

namespace qiso::freeprod {

using Complex = std::complex<double>;

/// Relative size below which the sum of two coefficients on the same word is
/// treated as an exact cancellation and the term is dropped.
inline constexpr double kCancellationTolerance = 1e-15;

/// Finite complex combination of reduced words in C[Z_2 * Z^inf].
///
/// No stored coefficient is zero. Terms are kept in word order so iteration,
/// serialization and floating-point summation order are deterministic.
class GroupAlgebraElement {
 public:
  using Terms = std::map<Word, Complex>;

  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(Complex scalar);
  explicit GroupAlgebraElement(const Word& w, Complex coef = 1.0);

  static GroupAlgebraElement identity() { return GroupAlgebraElement(Word{}); }
  static GroupAlgebraElement y() { return GroupAlgebraElement(Word::y()); }
  static GroupAlgebraElement r(std::uint32_t k, std::int64_t exp = 1) {
    return GroupAlgebraElement(Word::r(k, exp));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Complex coefficient(const Word& w) const;

  /// Largest coefficient modulus; 0 for the zero element.
  double max_abs_coefficient() const;

  void add_term(const Word& w, Complex coef);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(Complex scalar);
  GroupAlgebraElement& operator*=(const GroupAlgebraElement& other);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, Complex s) { return a *= s; }
  friend GroupAlgebraElement operator*(Complex s, GroupAlgebraElement a) { return a *= s; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  GroupAlgebraElement operator-() const { return *this * Complex(-1.0); }

  /// Antilinear involution (c w)* = conj(c) w^{-1}.
  GroupAlgebraElement star() const;

  bool operator==(const GroupAlgebraElement&) const = default;

 private:
  Terms terms_;
};

inline GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a * b; }
inline GroupAlgebraElement star(const GroupAlgebraElement& a) { return a.star(); }

/// max |coefficient| of a - b.
double distance(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// Element of C[G] (x) C[G], indexed by pairs of words.
class TensorElement {
 public:
  using Terms = std::map<std::pair<Word, Word>, Complex>;

  void add_term(const Word& left, const Word& right, Complex coef);
  TensorElement& operator+=(const TensorElement& other);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double max_abs_coefficient() const;

  bool operator==(const TensorElement&) const = default;

 private:
  Terms terms_;
};

/// a (x) b
TensorElement tensor(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
double distance(const TensorElement& a, const TensorElement& b);

/// Delta(w) = w (x) w on group-like basis elements.
std::pair<Word, Word> coproduct_grouplike(const Word& w);
/// Linear extension of coproduct_grouplike.
TensorElement coproduct(const GroupAlgebraElement& a);

}  // namespace qiso::freeprod
