#include "qiso/freeprod/group_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace qiso::freeprod {

namespace {

template <typename Map, typename Key>
void accumulate(Map& terms, const Key& key, Complex coef) {
  if (coef == Complex(0.0)) return;
  auto [it, inserted] = terms.try_emplace(key, coef);
  if (inserted) return;
  const Complex sum = it->second + coef;
  const double scale = std::max(std::abs(it->second), std::abs(coef));
  if (std::abs(sum) <= kCancellationTolerance * scale)
    terms.erase(it);
  else
    it->second = sum;
}

template <typename Map>
double max_abs(const Map& terms) {
  double m = 0.0;
  for (const auto& [_, c] : terms) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(Complex scalar) { add_term(Word{}, scalar); }

GroupAlgebraElement::GroupAlgebraElement(const Word& w, Complex coef) { add_term(w, coef); }

Complex GroupAlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

double GroupAlgebraElement::max_abs_coefficient() const { return max_abs(terms_); }

void GroupAlgebraElement::add_term(const Word& w, Complex coef) { accumulate(terms_, w, coef); }

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(Complex scalar) {
  if (scalar == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    if (it->second == Complex(0.0))
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const GroupAlgebraElement& other) {
  return *this = *this * other;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::star() const {
  GroupAlgebraElement out;
  for (const auto& [w, c] : terms_) out.add_term(w.inverse(), std::conj(c));
  return out;
}

double distance(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return (a - b).max_abs_coefficient();
}

void TensorElement::add_term(const Word& left, const Word& right, Complex coef) {
  accumulate(terms_, std::make_pair(left, right), coef);
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  for (const auto& [k, c] : other.terms_) accumulate(terms_, k, c);
  return *this;
}

double TensorElement::max_abs_coefficient() const { return max_abs(terms_); }

TensorElement tensor(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  TensorElement out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa, wb, ca * cb);
  return out;
}

double distance(const TensorElement& a, const TensorElement& b) {
  TensorElement diff = a;
  for (const auto& [k, c] : b.terms()) diff.add_term(k.first, k.second, -c);
  return diff.max_abs_coefficient();
}

std::pair<Word, Word> coproduct_grouplike(const Word& w) { return {w, w}; }

TensorElement coproduct(const GroupAlgebraElement& a) {
  TensorElement out;
  for (const auto& [w, c] : a.terms()) {
    auto [left, right] = coproduct_grouplike(w);
    out.add_term(left, right, c);
  }
  return out;
}

}  // namespace qiso::freeprod
