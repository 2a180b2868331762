#include <gtest/gtest.h>

#include "qshuffle/families.hpp"
#include "test_support.hpp"

namespace qshuffle {
namespace {

using testing::W;

std::string repeat(const std::string& s, unsigned n) {
  std::string out;
  for (unsigned k = 0; k < n; ++k) out += s;
  return out;
}

// prefix, block, suffix as written for each family, independent of the
// library's own shape table.
struct Template {
  const char* name;
  const char* prefix;
  const char* block;
  const char* suffix;
};

constexpr Template kTemplates[] = {
    {"XXYY_pow", "", "xxyy", ""},     {"YYXX_pow", "", "yyxx", ""},     {"XXYY_xx", "", "xxyy", "xx"},
    {"YYXX_yy", "", "yyxx", "yy"},    {"xyy_XXYY", "xyy", "xxyy", ""},  {"yxx_YYXX", "yxx", "yyxx", ""},
    {"x_YYXX", "x", "yyxx", ""},      {"y_XXYY", "y", "xxyy", ""},      {"XXYY_xxy", "", "xxyy", "xxy"},
    {"YYXX_yyx", "", "yyxx", "yyx"},  {"XXYY_x", "", "xxyy", "x"},      {"YYXX_y", "", "yyxx", "y"},
    {"x_YYXX_y", "x", "yyxx", "y"},   {"y_XXYY_x", "y", "xxyy", "x"},   {"xyy_XXYY_x", "xyy", "xxyy", "x"},
    {"yxx_YYXX_y", "yxx", "yyxx", "y"},
};

TEST(Alternating, Examples) {
  EXPECT_EQ(alternating(AltFamily::GHat, 3), W("xyxyxy"));
  EXPECT_EQ(alternating(AltFamily::WMinus, 2), W("xyxyx"));
  EXPECT_EQ(alternating(AltFamily::WPlus, 4), W("yxyxyxy"));
  EXPECT_TRUE(alternating(AltFamily::G, 0).empty());
  EXPECT_TRUE(alternating(AltFamily::GHat, 0).empty());
  EXPECT_EQ(alternating(AltFamily::WMinus, 0), W("x"));
  EXPECT_THROW(alternating(AltFamily::WPlus, 0), std::invalid_argument);
  EXPECT_EQ(alternating_w(0), W("x"));
  EXPECT_EQ(alternating_w(-1), W("xyx"));
  EXPECT_EQ(alternating_w(1), W("y"));
  EXPECT_EQ(alternating_w(2), W("yxy"));
}

TEST(DoublyAlternating, Examples) {
  EXPECT_EQ(doubly_alternating(DaFamily::XXYY_pow, 1), W("xxyy"));
  EXPECT_EQ(doubly_alternating(DaFamily::XXYY_xx, 1), W("xxyyxx"));
  EXPECT_EQ(doubly_alternating(DaFamily::yxx_YYXX_y, 0), W("yxxy"));
  EXPECT_EQ(doubly_alternating("XXYY_x", 1), W("xxyyx"));
  EXPECT_THROW(doubly_alternating("nope", 1), std::invalid_argument);
}

TEST(DoublyAlternating, MatchesWrittenTemplates) {
  for (const Template& t : kTemplates) {
    for (unsigned n = 0; n <= 4; ++n) {
      const std::string text = std::string(t.prefix) + repeat(t.block, n) + t.suffix;
      const Word expected = text.empty() ? Word{} : W(text);
      EXPECT_EQ(doubly_alternating(t.name, n), expected) << t.name << " n=" << n;
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(W("xyxyx")).to_string(), "alternating W_-2");
  EXPECT_EQ(classify(W("xxyx")).to_string(), "not-in-U at 0: xxyx");
  EXPECT_EQ(classify(Word{}).to_string(), "trivial");
  EXPECT_EQ(classify(W("xxyyx")).to_string(), "doubly-alternating XXYY_x n=1");
  EXPECT_EQ(classify(W("yyy")).to_string(), "power y^3");
  EXPECT_EQ(classify(W("xyxy")).to_string(), "alternating Ghat_2");
  EXPECT_EQ(classify(W("yx")).to_string(), "alternating G_1");
  EXPECT_EQ(classify(W("yxyxy")).to_string(), "alternating W_3");
  EXPECT_EQ(classify(W("xxyy")).to_string(), "doubly-alternating XXYY_pow n=1");
}

TEST(Classify, TieBreaksPreferShortestDescription) {
  // x is W_0, x(yyxx)^0 and a letter power; the power wins.
  EXPECT_EQ(classify(W("x")).to_string(), "power x^1");
  // xx is (xxyy)^0 xx and x^2.
  EXPECT_EQ(classify(W("xx")).to_string(), "power x^2");
  // xy is Ghat_1 and x(yyxx)^0 y.
  EXPECT_EQ(classify(W("xy")).to_string(), "alternating Ghat_1");
  // xxy is (xxyy)^0 xxy only.
  EXPECT_EQ(classify(W("xxy")).to_string(), "doubly-alternating XXYY_xxy n=0");
}

TEST(Classify, ReportsLeftmostForbiddenSegment) {
  // yxxx at 1 and xyyy at 4 are also present; the scan stops at 0.
  EXPECT_EQ(classify(W("xyxxxyyy")).to_string(), "not-in-U at 0: xyxx");
  EXPECT_EQ(classify(W("xxyyyx")).to_string(), "not-in-U at 1: xyyy");
  EXPECT_EQ(classify(W("yyxxyyxxxy")).to_string(), "not-in-U at 5: yxxx");
  const auto& segs = forbidden_segments();
  std::vector<std::string> text;
  for (const auto& s : segs) text.push_back(s.to_string());
  std::sort(text.begin(), text.end());
  EXPECT_EQ(text, (std::vector<std::string>{"xxxy", "xxyx", "xyxx", "xyyy", "yxxx", "yxyy", "yyxy", "yyyx"}));
}

TEST(Classify, ReconstructRoundTrip) {
  for (DaFamily f : kAllDaFamilies) {
    for (unsigned n = 0; n <= 6; ++n) {
      const Word w = doubly_alternating(f, n);
      EXPECT_EQ(classify(w).reconstruct(), w) << name(f) << " n=" << n;
      EXPECT_TRUE(classify(w).in_U());
    }
  }
  for (AltFamily f : {AltFamily::GHat, AltFamily::G, AltFamily::WMinus, AltFamily::WPlus}) {
    for (unsigned n = f == AltFamily::WPlus ? 1 : 0; n <= 6; ++n) {
      const Word w = alternating(f, n);
      EXPECT_EQ(classify(w).reconstruct(), w) << name(f) << " n=" << n;
    }
  }
  EXPECT_THROW(classify(W("xxxy")).reconstruct(), std::logic_error);
}

TEST(IdealJ, SpanSizes) {
  EXPECT_TRUE(span_J_degree(3).empty());
  const auto d4 = span_J_degree(4);
  ASSERT_EQ(d4.size(), 2U);
  EXPECT_EQ(d4[0], serre_generators()[0]);
  EXPECT_EQ(d4[1], serre_generators()[1]);
  EXPECT_EQ(span_J_degree(5).size(), 8U);
  const LaurentInt three = q_int(3);
  const FreeElement g1 =
      testing::E("xxxy") - three * testing::E("xxyx") + three * testing::E("xyxx") - testing::E("yxxx");
  EXPECT_EQ(serre_generators()[0], g1);
}

TEST(IdealJ, OrthogonalityExamples) {
  EXPECT_TRUE(in_U_by_orthogonality(W("xxyy")));
  EXPECT_FALSE(in_U_by_orthogonality(W("xxyx")));
  EXPECT_TRUE(in_U_by_orthogonality(W("x")));
}

TEST(IdealJ, ClassifierAgreesWithOracleThroughLengthTen) {
  std::size_t checked = 0;
  for (std::size_t len = 1; len <= 10; ++len) {
    const auto span = span_J_degree(len);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const Word w = Word::from_msb_bits(bits, len);
      ASSERT_EQ(classify(w).in_U(), in_U_by_orthogonality(w, span)) << w.to_string();
      ++checked;
    }
  }
  EXPECT_EQ(checked, 2046U);
}

}  // namespace
}  // namespace qshuffle
