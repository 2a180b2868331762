#include <gtest/gtest.h>

#include <algorithm>
#include <unordered_set>

#include "qshuffle/errors.hpp"
#include "test_support.hpp"

namespace qshuffle {
namespace {

using testing::W;

std::string naive_text(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += to_char(w[i]);
  return s;
}

TEST(Letter, TwoInhabitants) {
  EXPECT_EQ(other(Letter::X), Letter::Y);
  EXPECT_EQ(other(Letter::Y), Letter::X);
  EXPECT_EQ(to_char(Letter::X), 'x');
  EXPECT_EQ(to_char(Letter::Y), 'y');
}

TEST(Word, ParseAndRender) {
  EXPECT_TRUE(W("1").empty());
  EXPECT_EQ(W("1").to_string(), "1");
  EXPECT_EQ(W("xxyy").to_string(), "xxyy");
  EXPECT_EQ(W("xxyy").size(), 4U);
  EXPECT_EQ(W("xyy").count(Letter::Y), 2U);
  EXPECT_EQ(W("xyy").front(), Letter::X);
  EXPECT_EQ(W("xyy").back(), Letter::Y);
}

TEST(Word, ParseErrors) {
  try {
    W("xyzx");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "z");
    EXPECT_EQ(e.position(), 2U);
  }
  EXPECT_THROW(W(""), ParseError);
  EXPECT_THROW(W("x1"), ParseError);
}

TEST(Word, LongWordsCrossLimbBoundaries) {
  std::string text;
  for (int i = 0; i < 150; ++i) text += (i % 3 == 0 || i % 7 == 0) ? 'y' : 'x';
  const Word w = W(text);
  EXPECT_EQ(w.size(), 150U);
  EXPECT_EQ(naive_text(w), text);
  EXPECT_EQ(w.to_string(), text);
  EXPECT_EQ(w.substr(60, 10).to_string(), text.substr(60, 10));
  EXPECT_EQ((w + W("xy")).to_string(), text + "xy");
  EXPECT_EQ(W("xyy").power(50).to_string().size(), 150U);
}

TEST(Word, EqualityIsSequenceEquality) {
  EXPECT_EQ(W("xy"), W("xy"));
  EXPECT_NE(W("xy"), W("yx"));
  EXPECT_NE(W("x"), W("xx"));
  // Trailing x letters are zero bits: the length must disambiguate.
  EXPECT_NE(W("yx"), W("yxx"));
  EXPECT_NE(Word{}, W("x"));
}

TEST(Word, GradedLexicographicOrder) {
  std::vector<Word> words = {W("yx"), W("x"), W("xyx"), W("1"), W("y"), W("xy"), W("xx"), W("yy")};
  std::sort(words.begin(), words.end());
  std::vector<std::string> text;
  for (const auto& w : words) text.push_back(w.to_string());
  EXPECT_EQ(text, (std::vector<std::string>{"1", "x", "y", "xx", "xy", "yx", "yy", "xyx"}));
}

TEST(Word, MsbBitsRoundTrip) {
  EXPECT_EQ(Word::from_msb_bits(0b011, 3), W("xyy"));
  EXPECT_EQ(W("yxy").to_msb_bits(), 0b101U);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = testing::random_word(rng, 64);
    if (w.empty()) continue;
    EXPECT_EQ(Word::from_msb_bits(w.to_msb_bits(), w.size()), w);
  }
}

TEST(Word, HashSeparatesDistinctShortWords) {
  std::unordered_set<std::size_t> hashes;
  std::size_t count = 0;
  for (std::size_t len = 0; len <= 10; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      hashes.insert((len == 0 ? Word{} : Word::from_msb_bits(bits, len)).hash());
      ++count;
    }
  }
  EXPECT_EQ(hashes.size(), count);
}

}  // namespace
}  // namespace qshuffle
