#pragma once

#include <iosfwd>
#include <vector>

#include "qiso/podles/block_operator.hpp"

namespace qiso::podles {

/// k -> ||X restricted to span{e_n : n >= k} (both legs)||, for k = 0..M-b.
/// A compact operator has tail norms tending to 0; a profile bounded below by
/// delta across the whole interior is flagged as a non-compactness witness.
struct CompactnessProfile {
  std::vector<double> tail_norms;
  double delta = 0.0;
  double min_tail = 0.0;
  bool non_compact_witness = false;
};

CompactnessProfile compactness_profile(const BlockOperator& X, int buffer, double delta = 0.5);

struct ProfileMetadata {
  double theta = 0.0;
  double mu = 0.0;
  double c = 0.0;
  int M = 0;
};

/// CSV with header `k,tail_norm,theta,mu,c,M`, one row per k.
void write_profile_csv(std::ostream& os, const CompactnessProfile& profile, const ProfileMetadata& meta);

}  // namespace qiso::podles
