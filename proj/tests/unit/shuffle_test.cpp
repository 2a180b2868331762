#include <gtest/gtest.h>

#include "qshuffle/shuffle.hpp"
#include "test_support.hpp"

namespace qshuffle {
namespace {

using testing::E;
using testing::W;

FreeElement S(std::string_view u, std::string_view v) { return shuffle(W(u), W(v)); }

TEST(Shuffle, Examples) {
  EXPECT_EQ(S("x", "y"), E("xy + q^-2*yx"));
  EXPECT_EQ(S("y", "x"), E("yx + q^-2*xy"));
  EXPECT_EQ(S("x", "x"), E("(q^2 + 1)*xx"));
  EXPECT_EQ(S("x", "xy"), E("(q^2 + 1)*xxy + xyx"));
  EXPECT_EQ(to_string(S("x", "xy")), "(q^2 + 1)*xxy + xyx");
  EXPECT_EQ(shuffle(Word{}, W("xyx")), E("xyx"));
  EXPECT_EQ(shuffle(W("xyx"), Word{}), E("xyx"));
  EXPECT_EQ(shuffle(Word{}, Word{}), FreeElement::one());
}

TEST(Shuffle, HandComputedTwoByOne) {
  // Interleavings of xy with y: y placed before x contributes <y,x> = -2,
  // before y contributes <y,y> = 2, so yxy picks up q^0.
  EXPECT_EQ(S("xy", "y"), E("(q^2 + 1)*xyy + yxy"));
}

TEST(Shuffle, AgreesWithOracleAndRightPeelThroughTotalEight) {
  for (std::size_t total = 0; total <= 8; ++total) {
    for (std::size_t lu = 0; lu <= total; ++lu) {
      const std::size_t lv = total - lu;
      for (std::uint64_t bu = 0; bu < (std::uint64_t{1} << lu); ++bu) {
        const Word u = lu == 0 ? Word{} : Word::from_msb_bits(bu, lu);
        for (std::uint64_t bv = 0; bv < (std::uint64_t{1} << lv); ++bv) {
          const Word v = lv == 0 ? Word{} : Word::from_msb_bits(bv, lv);
          const FreeElement p = shuffle(u, v);
          ASSERT_EQ(p, shuffle_oracle(u, v)) << u.to_string() << " * " << v.to_string();
          ASSERT_EQ(p, detail::shuffle_right_peel(u, v)) << u.to_string() << " * " << v.to_string();
        }
      }
    }
  }
}

TEST(Shuffle, GeneralPathMatchesPackedPath) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Word u = testing::random_word(rng, 7);
    const Word v = testing::random_word(rng, 7);
    EXPECT_EQ(detail::shuffle_general(u, v), shuffle(u, v)) << u.to_string() << " * " << v.to_string();
  }
}

TEST(Shuffle, ProductsLongerThanSixtyFourLetters) {
  // 66 letters forces the unpacked path; a single letter keeps it cheap.
  const Word u = W("xy").power(33);
  const Word v = W("y");
  const FreeElement p = shuffle(u, v);
  EXPECT_EQ(p, detail::shuffle_right_peel(u, v));
  EXPECT_TRUE(p.is_homogeneous(33, 34));
  BigInt sum = 0;
  for (const auto& [w, c] : p) sum += c.eval_at_one();
  EXPECT_EQ(sum, BigInt(67));
}

TEST(Shuffle, PreservesBigradingAndCountsInterleavings) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const Word u = testing::random_word(rng, 6);
    const Word v = testing::random_word(rng, 6);
    const FreeElement p = shuffle(u, v);
    const std::size_t nx = u.count(Letter::X) + v.count(Letter::X);
    const std::size_t ny = u.count(Letter::Y) + v.count(Letter::Y);
    if (nx + ny > 0) {
      EXPECT_TRUE(p.is_homogeneous(nx, ny));
    }
    BigInt sum = 0;
    for (const auto& [w, c] : p) sum += c.eval_at_one();
    BigInt binom = 1;
    for (std::size_t i = 1; i <= u.size(); ++i) binom = binom * (v.size() + i) / i;
    EXPECT_EQ(sum, binom);
  }
}

TEST(Shuffle, BilinearAssociativeWithUnit) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const FreeElement a = testing::random_element(rng, 3, 3);
    const FreeElement b = testing::random_element(rng, 3, 3);
    const FreeElement c = testing::random_element(rng, 3, 3);
    EXPECT_EQ(shuffle(shuffle(a, b), c), shuffle(a, shuffle(b, c)));
    EXPECT_EQ(shuffle(a, b + c), shuffle(a, b) + shuffle(a, c));
    EXPECT_EQ(shuffle(FreeElement::one(), a), a);
    EXPECT_EQ(shuffle(a, FreeElement::one()), a);
  }
}

TEST(Shuffle, SerreRelationsVanish) {
  const FreeElement x = E("x");
  const FreeElement y = E("y");
  const LaurentInt three = q_int(3);
  auto s = [](std::initializer_list<FreeElement> fs) {
    FreeElement acc = FreeElement::one();
    for (const auto& f : fs) acc = shuffle(acc, f);
    return acc;
  };
  EXPECT_TRUE((s({x, x, x, y}) - three * s({x, x, y, x}) + three * s({x, y, x, x}) - s({y, x, x, x})).is_zero());
  EXPECT_TRUE((s({y, y, y, x}) - three * s({y, y, x, y}) + three * s({y, x, y, y}) - s({x, y, y, y})).is_zero());
  // With [2] in place of [3] the combination does not vanish.
  const LaurentInt two = q_int(2);
  EXPECT_FALSE((s({x, x, x, y}) - two * s({x, x, y, x}) + two * s({x, y, x, x}) - s({y, x, x, x})).is_zero());
}

TEST(Commutator, Examples) {
  EXPECT_TRUE(commutator_qk(E("xy"), E("xy"), 0).is_zero());
  EXPECT_EQ(commutator_qk(FreeElement::one(), E("x"), 2), E("(q^2 - q^-2)*x"));
  // q(xy + q^-2 yx) - q^-1(yx + q^-2 xy): the yx terms cancel.
  EXPECT_EQ(commutator_qk(E("x"), E("y"), 1), E("(q - q^-3)*xy"));
  EXPECT_EQ(commutator_qk(E("x"), E("y"), 0), E("(1 - q^-2)*xy + (q^-2 - 1)*yx"));
}

TEST(StarPower, Examples) {
  EXPECT_EQ(star_power(E("x"), 0), FreeElement::one());
  EXPECT_EQ(star_power(E("x"), 1), E("x"));
  EXPECT_EQ(star_power(E("x"), 2), E("(1 + q^2)*xx"));
  EXPECT_EQ(star_power(E("x"), 3), E("(1 + q^2)*(1 + q^2 + q^4)*xxx"));
}

}  // namespace
}  // namespace qshuffle
