#include "qiso/action/equivariant_rep.hpp"

#include <stdexcept>

namespace qiso::action {

using freeprod::GroupAlgebraElement;
using freeprod::Word;

EquivariantRep default_rep(int M) {
  EquivariantRep rep;
  for (int n = 0; n < M; ++n) {
    const auto r = Word::r(static_cast<std::uint32_t>(n));
    rep.qplus.emplace_back(r);
    rep.qminus.emplace_back(r * Word::y());
  }
  return rep;
}

EquivariantRep trivial_rep(int M) {
  EquivariantRep rep;
  rep.qplus.assign(static_cast<std::size_t>(M), GroupAlgebraElement::identity());
  rep.qminus = rep.qplus;
  return rep;
}

EquivariantRep violating_rep(int M, int n) {
  if (n < 0 || n >= M) throw std::out_of_range("violating_rep: index outside the truncation");
  auto rep = default_rep(M);
  rep.qminus[static_cast<std::size_t>(n)] = GroupAlgebraElement::r(static_cast<std::uint32_t>(n));
  return rep;
}

}  // namespace qiso::action
