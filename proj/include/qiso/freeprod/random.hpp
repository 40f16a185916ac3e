#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qiso/freeprod/group_algebra.hpp"

namespace qiso::freeprod {

/// Product of up to `max_letters` random letters y, r_k^{+-1}, r_k^{+-2} with k < `max_index`.
/// Not reduced-length-exact: cancellations may shorten the result.
inline Word random_word(std::mt19937_64& rng, int max_letters, std::uint32_t max_index) {
  std::uniform_int_distribution<int> len(0, max_letters);
  std::uniform_int_distribution<std::uint32_t> gen(0, max_index);  // max_index -> y
  std::uniform_int_distribution<int> exp(-2, 1);
  std::vector<Syllable> raw;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    const auto g = gen(rng);
    if (g == max_index) {
      raw.push_back({Generator::y(), 1});
    } else {
      const int e = exp(rng);
      raw.push_back({Generator::r(g), e >= 0 ? e + 1 : e});
    }
  }
  return Word::reduce(raw);
}

/// Random element with up to `max_terms` terms and coefficients in [-1, 1] + i[-1, 1].
inline GroupAlgebraElement random_element(std::mt19937_64& rng, int max_terms, int max_letters,
                                          std::uint32_t max_index) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  GroupAlgebraElement out;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    const double re = coef(rng);
    const double im = coef(rng);
    out.add_term(random_word(rng, max_letters, max_index), Complex(re, im));
  }
  return out;
}

}  // namespace qiso::freeprod
