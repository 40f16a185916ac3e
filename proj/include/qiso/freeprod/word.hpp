#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qiso::freeprod {

/// A generator of Z_2 * Z^inf: either the involution y or a free generator r_k.
class Generator {
 public:
  static constexpr Generator y() { return Generator(-1); }
  static constexpr Generator r(std::uint32_t k) { return Generator(static_cast<std::int64_t>(k)); }

  constexpr bool is_y() const { return id_ < 0; }
  /// Index k of r_k. Meaningless for y.
  constexpr std::uint32_t index() const { return static_cast<std::uint32_t>(id_); }

  constexpr auto operator<=>(const Generator&) const = default;

 private:
  explicit constexpr Generator(std::int64_t id) : id_(id) {}
  std::int64_t id_;
};

struct Syllable {
  Generator gen;
  std::int64_t exp;

  constexpr auto operator<=>(const Syllable&) const = default;
};

/// Reduced word in Z_2 * Z^inf, run-length encoded.
///
/// Invariants: adjacent syllables carry distinct generators, every exponent
/// is nonzero, and a y-syllable always has exponent 1. The empty word is e.
class Word {
 public:
  Word() = default;

  /// Normal form of an arbitrary syllable list.
  static Word reduce(std::span<const Syllable> raw);
  static Word reduce(std::initializer_list<Syllable> raw) {
    return reduce(std::span<const Syllable>(raw.begin(), raw.size()));
  }
  static Word of(Generator g, std::int64_t exp = 1) { return reduce({Syllable{g, exp}}); }
  static Word y() { return of(Generator::y()); }
  static Word r(std::uint32_t k, std::int64_t exp = 1) { return of(Generator::r(k), exp); }

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }

  Word inverse() const;

  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& other) { return *this = *this * other; }

  auto operator<=>(const Word&) const = default;

  std::size_t hash() const;

 private:
  std::vector<Syllable> syllables_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `e`, or tokens `y` / `r<k>^<exp>` joined by `*`, e.g. `r0^1*y*r1^-1`.
std::string to_string(const Word& w);
/// Inverse of to_string; also accepts `r<k>` without exponent and unreduced input.
Word parse_word(std::string_view text);

}  // namespace qiso::freeprod

template <>
struct std::hash<qiso::freeprod::Word> {
  std::size_t operator()(const qiso::freeprod::Word& w) const noexcept { return w.hash(); }
};
