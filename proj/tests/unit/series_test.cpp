#include <gtest/gtest.h>

#include "qshuffle/errors.hpp"
#include "qshuffle/relations.hpp"
#include "qshuffle/series.hpp"
#include "qshuffle/shuffle.hpp"
#include "test_support.hpp"

namespace qshuffle {
namespace {

using testing::E;
using testing::W;

// k-th coefficient of a generating function, straight from the word families.
Word coefficient_word(AltFamily f, unsigned k) {
  return alternating(f, f == AltFamily::WPlus ? k + 1 : k);
}

struct Factor {
  AltFamily family;
  bool negated;
};

struct Product {
  const char* id;
  Factor left;
  Factor right;
};

constexpr Product kProducts[] = {
    {"S6.1.1", {AltFamily::GHat, true}, {AltFamily::GHat, false}},
    {"S6.1.2", {AltFamily::G, true}, {AltFamily::G, false}},
    {"S6.1.3", {AltFamily::WMinus, true}, {AltFamily::WMinus, false}},
    {"S6.1.4", {AltFamily::WPlus, true}, {AltFamily::WPlus, false}},
    {"S6.2.1", {AltFamily::WMinus, true}, {AltFamily::GHat, false}},
    {"S6.2.2", {AltFamily::GHat, false}, {AltFamily::WMinus, true}},
    {"S6.3.1", {AltFamily::WMinus, true}, {AltFamily::G, false}},
    {"S6.3.2", {AltFamily::G, false}, {AltFamily::WMinus, true}},
    {"S6.4.1", {AltFamily::WPlus, true}, {AltFamily::GHat, false}},
    {"S6.4.2", {AltFamily::GHat, false}, {AltFamily::WPlus, true}},
    {"S6.5.1", {AltFamily::WPlus, true}, {AltFamily::G, false}},
    {"S6.5.2", {AltFamily::G, false}, {AltFamily::WPlus, true}},
    {"S6.6.1", {AltFamily::G, true}, {AltFamily::GHat, false}},
    {"S6.6.2", {AltFamily::GHat, false}, {AltFamily::G, true}},
    {"S6.7.1", {AltFamily::WPlus, true}, {AltFamily::WMinus, false}},
    {"S6.7.2", {AltFamily::WMinus, false}, {AltFamily::WPlus, true}},
};

// Coefficient of t^m in left(+-t) * right(+-t) as a finite convolution.
FreeElement convolution(const Product& p, unsigned m) {
  FreeElement sum;
  for (unsigned k = 0; k <= m; ++k) {
    const bool odd = (p.left.negated && k % 2 == 1) != (p.right.negated && (m - k) % 2 == 1);
    const FreeElement term =
        shuffle(coefficient_word(p.left.family, k), coefficient_word(p.right.family, m - k));
    if (odd) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

TEST(Series, BuildExamples) {
  const TruncatedSeries ghat = build_series(AltFamily::GHat, 2);
  EXPECT_EQ(ghat.order(), 2U);
  EXPECT_EQ(ghat[0], FreeElement::one());
  EXPECT_EQ(ghat[1], E("xy"));
  EXPECT_EQ(ghat[2], E("xyxy"));
  const TruncatedSeries wm = build_series(AltFamily::WMinus, 1);
  EXPECT_EQ(wm[0], E("x"));
  EXPECT_EQ(wm[1], E("xyx"));
  const TruncatedSeries wp = build_series(AltFamily::WPlus, 0);
  EXPECT_EQ(wp.order(), 0U);
  EXPECT_EQ(wp[0], E("y"));
  EXPECT_EQ(build_series(AltFamily::G, 1)[1], E("yx"));
  EXPECT_EQ(to_string(ghat), "1 + (xy)*t + (xyxy)*t^2");
  EXPECT_EQ(to_string(TruncatedSeries(3)), "0");
  EXPECT_THROW(TruncatedSeries(std::vector<FreeElement>{}), std::invalid_argument);
}

TEST(Series, SubstituteNegT) {
  const TruncatedSeries s(std::vector<FreeElement>{FreeElement::one(), E("xy")});
  const TruncatedSeries n = substitute_neg_t(s);
  EXPECT_EQ(n[0], FreeElement::one());
  EXPECT_EQ(n[1], E("-xy"));
  for (AltFamily f : {AltFamily::GHat, AltFamily::G, AltFamily::WMinus, AltFamily::WPlus}) {
    const TruncatedSeries b = build_series(f, 5);
    EXPECT_EQ(substitute_neg_t(substitute_neg_t(b)), b);
  }
}

TEST(Series, StarSeries) {
  const TruncatedSeries g = build_series(AltFamily::GHat, 2);
  const TruncatedSeries p = star_series(substitute_neg_t(g), g);
  EXPECT_EQ(p[0], FreeElement::one());
  EXPECT_TRUE(p[1].is_zero());
  EXPECT_EQ(p[2], -pow(q_int(2), 2) * E("xxyy"));
  EXPECT_THROW(star_series(g, build_series(AltFamily::GHat, 3)), std::invalid_argument);
}

TEST(Series, OddCoefficientsOfSquaresVanish) {
  for (AltFamily f : {AltFamily::GHat, AltFamily::G, AltFamily::WMinus, AltFamily::WPlus}) {
    const TruncatedSeries s = build_series(f, 7);
    const TruncatedSeries p = star_series(substitute_neg_t(s), s);
    for (unsigned m = 1; m <= 7; m += 2) EXPECT_TRUE(p[m].is_zero()) << name(f) << " t^" << m;
  }
}

TEST(Series, StarSeriesIsAssociative) {
  std::mt19937_64 rng(53);
  for (unsigned order = 0; order <= 4; ++order) {
    auto random_series = [&] {
      TruncatedSeries s(order);
      for (unsigned m = 0; m <= order; ++m) s[m] = testing::random_element(rng, 2, 3);
      return s;
    };
    const TruncatedSeries a = random_series();
    const TruncatedSeries b = random_series();
    const TruncatedSeries c = random_series();
    EXPECT_EQ(star_series(star_series(a, b), c), star_series(a, star_series(b, c)));
  }
}

TEST(SeriesIdentities, CatalogMatchesIndependentTable) {
  const auto& all = series_identities();
  ASSERT_EQ(all.size(), std::size(kProducts));
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].id, kProducts[i].id);
  EXPECT_THROW(find_series_identity("S9.9"), UnknownIdentity);
}

TEST(SeriesIdentities, LeftSidesEqualFiniteConvolutions) {
  constexpr unsigned kOrder = 6;
  for (const Product& p : kProducts) {
    const TruncatedSeries lhs = find_series_identity(p.id).lhs(kOrder);
    for (unsigned m = 0; m <= kOrder; ++m) EXPECT_EQ(lhs[m], convolution(p, m)) << p.id << " t^" << m;
  }
}

TEST(SeriesIdentities, AllHoldThroughOrderSix) {
  for (const Product& p : kProducts) {
    const VerificationReport r = verify_series_identity(p.id, 6);
    EXPECT_TRUE(r.pass) << p.id << " t^" << r.t_power.value_or(0) << ": " << to_string(r.difference);
    EXPECT_EQ(r.params, std::vector<unsigned>{6});
  }
  EXPECT_TRUE(verify_series_identity("S6.1.1", 0).pass);
  EXPECT_TRUE(verify_series_identity("S6.5.2", 5).pass);
}

TEST(SeriesIdentities, ClosedFormsMatchConvolutionCatalog) {
  for (unsigned n = 0; n <= 2; ++n) {
    const std::vector<unsigned> param{n};
    EXPECT_EQ(find_series_identity("S6.1.1").rhs_coefficient(2 * n), instantiate("P5.conv1.1", param).rhs);
    EXPECT_TRUE(find_series_identity("S6.1.1").rhs_coefficient(2 * n + 1).is_zero());
    EXPECT_EQ(find_series_identity("S6.1.3").rhs_coefficient(2 * n), instantiate("P5.conv1.3", param).rhs);
    EXPECT_EQ(find_series_identity("S6.2.1").rhs_coefficient(2 * n), instantiate("P5.conv3.3a", param).rhs);
    // W+(-t) G(t) at odd powers is q times the closed form (yyxx)^n yyx term.
    EXPECT_EQ(find_series_identity("S6.5.1").rhs_coefficient(2 * n + 1),
              q_power(1) * instantiate("P5.conv3.2a", param).rhs);
  }
}

TEST(SeriesIdentities, FailureNamesLowestDifferingPower) {
  // A deliberately wrong comparison through the public pieces: S6.1.1's
  // left side against S6.1.2's right side differs already at t^2.
  const TruncatedSeries lhs = find_series_identity("S6.1.1").lhs(4);
  const TruncatedSeries rhs = find_series_identity("S6.1.2").rhs(4);
  const TruncatedSeries diff = lhs - rhs;
  EXPECT_TRUE(diff[0].is_zero());
  EXPECT_TRUE(diff[1].is_zero());
  EXPECT_FALSE(diff[2].is_zero());
}

}  // namespace
}  // namespace qshuffle
