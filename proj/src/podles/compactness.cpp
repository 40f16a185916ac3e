#include "qiso/podles/compactness.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace qiso::podles {

CompactnessProfile compactness_profile(const BlockOperator& X, int buffer, double delta) {
  const int M = X.M();
  if (buffer < 0 || buffer >= M) throw std::invalid_argument("compactness_profile: buffer out of range");
  CompactnessProfile out;
  out.delta = delta;
  for (int k = 0; k <= M - buffer; ++k) {
    const int width = M - k;
    Matrix tail(X.dim(), 2 * width);
    tail.leftCols(width) = X.matrix().middleCols(k, width);
    tail.rightCols(width) = X.matrix().middleCols(M + k, width);
    out.tail_norms.push_back(operator_norm(tail));
  }
  out.min_tail = *std::min_element(out.tail_norms.begin(), out.tail_norms.end());
  out.non_compact_witness = out.min_tail >= delta;
  return out;
}

void write_profile_csv(std::ostream& os, const CompactnessProfile& profile, const ProfileMetadata& meta) {
  os << "k,tail_norm,theta,mu,c,M\n";
  os << std::setprecision(17);
  for (std::size_t k = 0; k < profile.tail_norms.size(); ++k)
    os << k << ',' << profile.tail_norms[k] << ',' << meta.theta << ',' << meta.mu << ',' << meta.c << ','
       << meta.M << '\n';
}

}  // namespace qiso::podles
