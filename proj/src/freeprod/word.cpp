#include "qiso/freeprod/word.hpp"

#include <charconv>

namespace qiso::freeprod {

namespace {

std::int64_t normalize_exp(Generator g, std::int64_t e) {
  if (g.is_y()) return (e % 2 != 0) ? 1 : 0;
  return e;
}

// Stack reduction: the top of `out` is the only place a new syllable can merge.
void push(std::vector<Syllable>& out, Syllable s) {
  s.exp = normalize_exp(s.gen, s.exp);
  if (s.exp == 0) return;
  if (!out.empty() && out.back().gen == s.gen) {
    const auto e = normalize_exp(s.gen, out.back().exp + s.exp);
    if (e == 0)
      out.pop_back();
    else
      out.back().exp = e;
    return;
  }
  out.push_back(s);
}

}  // namespace

Word Word::reduce(std::span<const Syllable> raw) {
  Word w;
  w.syllables_.reserve(raw.size());
  for (const auto& s : raw) push(w.syllables_, s);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back(Syllable{it->gen, normalize_exp(it->gen, -it->exp)});
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w.syllables_.reserve(a.size() + b.size());
  for (const auto& s : b.syllables_) push(w.syllables_, s);
  return w;
}

std::size_t Word::hash() const {
  // FNV-1a over (generator id, exponent) pairs.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (const auto& s : syllables_) {
    mix(s.gen.is_y() ? ~0ull : s.gen.index());
    mix(static_cast<std::uint64_t>(s.exp));
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += '*';
    if (s.gen.is_y()) {
      out += 'y';
    } else {
      out += 'r';
      out += std::to_string(s.gen.index());
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_integer(std::string_view digits, std::string_view token) {
  T value{};
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (digits.empty() || ec != std::errc{} || ptr != last)
    throw ParseError("malformed word token '" + std::string(token) + "'");
  return value;
}

Syllable parse_token(std::string_view token) {
  token = trim(token);
  if (token == "y") return Syllable{Generator::y(), 1};
  if (token.size() < 2 || token.front() != 'r')
    throw ParseError("malformed word token '" + std::string(token) + "'");
  const auto caret = token.find('^');
  const auto index_part = token.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1);
  const auto k = parse_integer<std::uint32_t>(index_part, token);
  std::int64_t exp = 1;
  if (caret != std::string_view::npos) exp = parse_integer<std::int64_t>(token.substr(caret + 1), token);
  return Syllable{Generator::r(k), exp};
}

}  // namespace

Word parse_word(std::string_view text) {
  text = trim(text);
  if (text == "e") return Word{};
  if (text.empty()) throw ParseError("empty word string");
  std::vector<Syllable> raw;
  std::size_t start = 0;
  while (true) {
    const auto star = text.find('*', start);
    raw.push_back(parse_token(text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start)));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return Word::reduce(raw);
}

}  // namespace qiso::freeprod
