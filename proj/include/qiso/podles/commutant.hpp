#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "qiso/podles/block_operator.hpp"

namespace qiso::podles {

struct CommutantOptions {
  /// Singular values below relative_cutoff * sigma_max count as null directions.
  double relative_cutoff = 1e-8;
  /// Seed for the random Hermitian element used by the reduced route.
  std::uint64_t seed = 0x5eed;
  /// Skip the eigenbasis reduction and solve the full Sylvester system.
  bool force_dense = false;
};

/// Dimension of {X : XT = TX for all generators T} plus conditioning data.
///
/// Scalar generators impose nothing and are dropped. When the remaining set
/// is closed under adjoints, the commutant sits inside the commutant of a
/// random Hermitian element H of the generated *-algebra, i.e. inside the
/// operators that are block-diagonal over the eigenspaces of H; the Sylvester
/// system is solved on that subspace only ("reduced" route). Otherwise all
/// (2M)^2 unknowns are kept ("dense" route). Either way the nullspace is
/// read off the singular values of the stacked system.
struct CommutantResult {
  std::size_t dimension = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  double sigma_max = 0.0;
  /// Largest singular value counted as null (0 if none).
  double largest_null_sigma = 0.0;
  /// Smallest singular value above the cutoff; the spectral gap that makes
  /// the dimension count robust.
  double smallest_retained_sigma = 0.0;
  std::string route;
};

CommutantResult commutant(std::span<const BlockOperator> generators, const CommutantOptions& opts = {});

inline std::size_t commutant_dimension(std::span<const BlockOperator> generators,
                                       const CommutantOptions& opts = {}) {
  return commutant(generators, opts).dimension;
}

}  // namespace qiso::podles
