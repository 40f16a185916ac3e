#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

#include "qiso/freeprod/random.hpp"
#include "qiso/freeprod/word.hpp"

using namespace qiso::freeprod;

namespace {

Syllable Y() { return {Generator::y(), 1}; }
Syllable R(std::uint32_t k, std::int64_t e) { return {Generator::r(k), e}; }

}  // namespace

TEST(Word, YSquaredIsIdentity) { EXPECT_TRUE(Word::reduce({Y(), Y()}).is_identity()); }

TEST(Word, InverseRunsCancel) { EXPECT_TRUE(Word::reduce({R(3, 2), R(3, -2)}).is_identity()); }

TEST(Word, CascadingCancellation) {
  const auto w = Word::reduce({R(0, 1), Y(), Y(), R(0, -1), R(1, 1)});
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w.syllables()[0], R(1, 1));
  EXPECT_EQ(w, Word::r(1));
}

TEST(Word, ExponentsMerge) {
  EXPECT_EQ(Word::reduce({R(2, 1), R(2, 3)}), Word::r(2, 4));
  EXPECT_EQ(Word::reduce({Y(), Y(), Y()}), Word::y());
  EXPECT_EQ(Word::r(5, 0), Word{});
}

TEST(Word, NormalFormInvariants) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const auto w = random_word(rng, 16, 4);
    const auto& s = w.syllables();
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_NE(s[i].exp, 0);
      if (s[i].gen.is_y()) {
        EXPECT_EQ(s[i].exp, 1);
      }
      if (i > 0) {
        EXPECT_NE(s[i].gen, s[i - 1].gen);
      }
    }
  }
}

TEST(Word, ReduceIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto w = random_word(rng, 12, 3);
    EXPECT_EQ(Word::reduce(w.syllables()), w);
  }
}

TEST(Word, AssociativityOnRandomTriples) {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_word(rng, 12, 5);
    const auto b = random_word(rng, 12, 5);
    const auto c = random_word(rng, 12, 5);
    ASSERT_EQ((a * b) * c, a * (b * c)) << to_string(a) << " | " << to_string(b) << " | " << to_string(c);
  }
}

TEST(Word, InverseIsTwoSided) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 500; ++t) {
    const auto a = random_word(rng, 12, 5);
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_TRUE((a.inverse() * a).is_identity());
    EXPECT_EQ(a.inverse().inverse(), a);
  }
}

TEST(Word, InverseOfProductReverses) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_word(rng, 10, 4);
    const auto b = random_word(rng, 10, 4);
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
  }
}

TEST(Word, ToStringFormat) {
  EXPECT_EQ(to_string(Word{}), "e");
  EXPECT_EQ(to_string(Word::reduce({R(0, 1), Y(), R(1, -1)})), "r0^1*y*r1^-1");
}

TEST(Word, ParseRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto w = random_word(rng, 12, 20);
    EXPECT_EQ(parse_word(to_string(w)), w);
  }
}

TEST(Word, ParseAcceptsShorthandAndReduces) {
  EXPECT_EQ(parse_word("r4"), Word::r(4));
  EXPECT_EQ(parse_word("y*y"), Word{});
  EXPECT_EQ(parse_word("r0*r0^-1*r2^3"), Word::r(2, 3));
  EXPECT_EQ(parse_word("e"), Word{});
}

TEST(Word, ParseRejectsGarbage) {
  EXPECT_THROW(parse_word(""), ParseError);
  EXPECT_THROW(parse_word("x3"), ParseError);
  EXPECT_THROW(parse_word("r"), ParseError);
  EXPECT_THROW(parse_word("r1^"), ParseError);
  EXPECT_THROW(parse_word("r1**y"), ParseError);
}

TEST(Word, HashAgreesWithEquality) {
  const auto a = Word::reduce({R(1, 1), Y(), R(1, -1)});
  const auto b = parse_word("r1^1*y*r1^-1");
  EXPECT_EQ(a.hash(), b.hash());
  std::unordered_set<Word> set{a, b, Word::y()};
  EXPECT_EQ(set.size(), 2u);
}

TEST(Word, OrderingIsTotal) {
  const auto a = Word::r(0);
  const auto b = Word::r(1);
  EXPECT_TRUE((a < b) != (b < a));
  EXPECT_FALSE(a < a);
}
