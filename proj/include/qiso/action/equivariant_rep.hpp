#pragma once

#include <vector>

#include "qiso/freeprod/group_algebra.hpp"

namespace qiso::action {

/// Coefficients of a D-equivariant unitary: U (e_n, e_n) = (e_n, e_n) (x) q+_n
/// and U (e_n, -e_n) = (e_n, -e_n) (x) q-_n, for n < size().
struct EquivariantRep {
  std::vector<freeprod::GroupAlgebraElement> qplus;
  std::vector<freeprod::GroupAlgebraElement> qminus;

  int size() const { return static_cast<int>(qplus.size()); }
};

/// q+_n = r_n, q-_n = r_n y: the representation V of the free-product group algebra.
EquivariantRep default_rep(int M);
/// Every q = e.
EquivariantRep trivial_rep(int M);
/// default_rep with q-_n replaced by r_n (the y dropped) at one index.
EquivariantRep violating_rep(int M, int n = 3);

}  // namespace qiso::action
