#pragma once

#include <functional>
#include <map>
#include <vector>

#include "qiso/freeprod/character.hpp"
#include "qiso/freeprod/group_algebra.hpp"
#include "qiso/podles/block_operator.hpp"

namespace qiso::action {

using freeprod::Complex;
using freeprod::GroupAlgebraElement;
using freeprod::Word;
using podles::BlockOperator;
using podles::Leg;

/// Operator on H (x) C[G]: a 2M x 2M matrix with group-algebra entries, stored
/// row-sparse (absent entries are zero). Basis indexing follows BlockOperator.
///
/// Products multiply entries in order, (ST)_ij = sum_k S_ik T_kj, which matches
/// composing the maps xi (x) b -> S(xi (x) 1)(1 (x) b).
class GAOperator {
 public:
  using Row = std::map<int, GroupAlgebraElement>;

  explicit GAOperator(int M);

  static GAOperator identity(int M);
  /// X (x) 1.
  static GAOperator lift(const BlockOperator& X);

  int M() const { return M_; }
  int dim() const { return 2 * M_; }

  const GroupAlgebraElement& at(int i, int j) const;
  const GroupAlgebraElement& at(Leg row_leg, int row, Leg col_leg, int col) const {
    return at(BlockOperator::index(row_leg, row, M_), BlockOperator::index(col_leg, col, M_));
  }
  const Row& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  void set(int i, int j, GroupAlgebraElement value);
  void add(int i, int j, const GroupAlgebraElement& value);
  void add(Leg row_leg, int row, Leg col_leg, int col, const GroupAlgebraElement& value) {
    add(BlockOperator::index(row_leg, row, M_), BlockOperator::index(col_leg, col, M_), value);
  }

  std::size_t nonzeros() const;

  /// Entrywise star and transpose.
  GAOperator adjoint() const;

  GAOperator& operator+=(const GAOperator& o);
  GAOperator& operator-=(const GAOperator& o);
  friend GAOperator operator+(GAOperator a, const GAOperator& b) { return a += b; }
  friend GAOperator operator-(GAOperator a, const GAOperator& b) { return a -= b; }
  friend GAOperator operator*(const GAOperator& a, const GAOperator& b);

  GAOperator map_entries(const std::function<GroupAlgebraElement(const GroupAlgebraElement&)>& f) const;

  /// (id (x) chi) applied entrywise.
  BlockOperator apply_character(const freeprod::Character& chi) const;

  /// (Tr (x) id): sum of diagonal entries.
  GroupAlgebraElement partial_trace() const;

  bool operator==(const GAOperator&) const = default;

 private:
  int M_;
  std::vector<Row> rows_;
};

/// max over entries of max |coefficient| of the difference.
double max_entry_distance(const GAOperator& a, const GAOperator& b);
/// Same, restricted to interior columns n <= limit on both legs.
double max_entry_distance(const GAOperator& a, const GAOperator& b, int interior_limit);

}  // namespace qiso::action
