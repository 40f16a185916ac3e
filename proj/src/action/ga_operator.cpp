#include "qiso/action/ga_operator.hpp"

#include <algorithm>

namespace qiso::action {

namespace {
const GroupAlgebraElement kZero{};
}

GAOperator::GAOperator(int M) : M_(M), rows_(static_cast<std::size_t>(2 * M)) {}

GAOperator GAOperator::identity(int M) {
  GAOperator out(M);
  for (int i = 0; i < out.dim(); ++i) out.set(i, i, GroupAlgebraElement::identity());
  return out;
}

GAOperator GAOperator::lift(const BlockOperator& X) {
  GAOperator out(X.M());
  for (int i = 0; i < X.dim(); ++i)
    for (int j = 0; j < X.dim(); ++j)
      if (X.matrix()(i, j) != Complex(0.0)) out.set(i, j, GroupAlgebraElement(X.matrix()(i, j)));
  return out;
}

const GroupAlgebraElement& GAOperator::at(int i, int j) const {
  const auto& r = rows_[static_cast<std::size_t>(i)];
  auto it = r.find(j);
  return it == r.end() ? kZero : it->second;
}

void GAOperator::set(int i, int j, GroupAlgebraElement value) {
  auto& r = rows_[static_cast<std::size_t>(i)];
  if (value.is_zero())
    r.erase(j);
  else
    r[j] = std::move(value);
}

void GAOperator::add(int i, int j, const GroupAlgebraElement& value) {
  if (value.is_zero()) return;
  auto& r = rows_[static_cast<std::size_t>(i)];
  auto& entry = r[j];
  entry += value;
  if (entry.is_zero()) r.erase(j);
}

std::size_t GAOperator::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

GAOperator GAOperator::adjoint() const {
  GAOperator out(M_);
  for (int i = 0; i < dim(); ++i)
    for (const auto& [j, v] : row(i)) out.set(j, i, v.star());
  return out;
}

GAOperator& GAOperator::operator+=(const GAOperator& o) {
  for (int i = 0; i < dim(); ++i)
    for (const auto& [j, v] : o.row(i)) add(i, j, v);
  return *this;
}

GAOperator& GAOperator::operator-=(const GAOperator& o) {
  for (int i = 0; i < dim(); ++i)
    for (const auto& [j, v] : o.row(i)) add(i, j, -v);
  return *this;
}

GAOperator operator*(const GAOperator& a, const GAOperator& b) {
  GAOperator out(a.M_);
  for (int i = 0; i < a.dim(); ++i)
    for (const auto& [k, aik] : a.row(i))
      for (const auto& [j, bkj] : b.row(k)) out.add(i, j, aik * bkj);
  return out;
}

GAOperator GAOperator::map_entries(const std::function<GroupAlgebraElement(const GroupAlgebraElement&)>& f) const {
  GAOperator out(M_);
  for (int i = 0; i < dim(); ++i)
    for (const auto& [j, v] : row(i)) out.set(i, j, f(v));
  return out;
}

BlockOperator GAOperator::apply_character(const freeprod::Character& chi) const {
  BlockOperator out(M_);
  for (int i = 0; i < dim(); ++i)
    for (const auto& [j, v] : row(i)) out.matrix()(i, j) = chi.evaluate(v);
  return out;
}

GroupAlgebraElement GAOperator::partial_trace() const {
  GroupAlgebraElement out;
  for (int i = 0; i < dim(); ++i) out += at(i, i);
  return out;
}

double max_entry_distance(const GAOperator& a, const GAOperator& b) { return max_entry_distance(a, b, a.M() - 1); }

double max_entry_distance(const GAOperator& a, const GAOperator& b, int interior_limit) {
  const GAOperator diff = a - b;
  const int M = a.M();
  double worst = 0.0;
  for (int i = 0; i < diff.dim(); ++i)
    for (const auto& [j, v] : diff.row(i)) {
      const int n = j < M ? j : j - M;
      if (n <= interior_limit) worst = std::max(worst, v.max_abs_coefficient());
    }
  return worst;
}

}  // namespace qiso::action
