#include <gtest/gtest.h>

#include "qshuffle/errors.hpp"
#include "test_support.hpp"

namespace qshuffle {
namespace {

using testing::evaluate;
using testing::random_laurent;

LaurentInt L(std::string_view s) { return parse_laurent(s); }

TEST(QPower, Monomials) {
  EXPECT_EQ(q_power(0), LaurentInt(1));
  EXPECT_EQ(q_power(2), LaurentInt::monomial(2));
  EXPECT_EQ(q_power(-2), LaurentInt::monomial(-2));
  EXPECT_EQ(to_string(q_power(2)), "q^2");
  EXPECT_EQ(to_string(q_power(-2)), "q^-2");
  EXPECT_EQ(to_string(q_power(1)), "q");
  EXPECT_EQ(to_string(q_power(0)), "1");
}

TEST(QInt, SmallValues) {
  EXPECT_TRUE(q_int(0).is_zero());
  EXPECT_EQ(q_int(1), LaurentInt(1));
  EXPECT_EQ(to_string(q_int(3)), "q^2 + 1 + q^-2");
  EXPECT_EQ(to_string(q_int(-2)), "-(q + q^-1)");
  // [3]_q at q = 2 is (8 - 1/8) / (2 - 1/2) = 21/4.
  EXPECT_EQ(evaluate(q_int(3), 2), testing::Rational(21, 4));
}

TEST(QInt, DefiningIdentity) {
  const LaurentInt d = q_power(1) - q_power(-1);
  for (int n = -10; n <= 10; ++n) {
    EXPECT_EQ(q_int(n) * d, q_power(n) - q_power(-n)) << "n = " << n;
    EXPECT_EQ(q_int(n).eval_at_one(), n) << "n = " << n;
  }
}

TEST(LaurentArithmetic, Examples) {
  EXPECT_TRUE((q_power(2) + -q_power(2)).is_zero());
  EXPECT_EQ((q_power(1) + q_power(-1)) * (q_power(1) - q_power(-1)), q_power(2) - q_power(-2));
  EXPECT_EQ(LaurentInt(1) * q_power(5), q_power(5));
  EXPECT_EQ(neg(q_power(3)), LaurentInt::monomial(3, -1));
  EXPECT_EQ(pow(q_int(2), 3), q_power(3) + 3 * q_power(1) + 3 * q_power(-1) + q_power(-3));
  EXPECT_EQ(pow(q_int(2), 0), LaurentInt(1));
  EXPECT_EQ(q_power(2).shifted(-5), q_power(-3));
}

TEST(LaurentArithmetic, EvalAtOne) {
  EXPECT_EQ(eval_at_one(q_int(3)), 3);
  EXPECT_EQ(eval_at_one(LaurentInt()), 0);
  EXPECT_EQ(eval_at_one(q_power(2) - q_power(-2)), 0);
}

TEST(LaurentArithmetic, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentInt a = random_laurent(rng);
    const LaurentInt b = random_laurent(rng);
    const LaurentInt c = random_laurent(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a + neg(a)).terms().empty());
    // Evaluation at integer points is a ring homomorphism.
    for (long q : {2L, -3L}) {
      EXPECT_EQ(evaluate(a * b, q), evaluate(a, q) * evaluate(b, q));
      EXPECT_EQ(evaluate(a - c, q), evaluate(a, q) - evaluate(c, q));
    }
  }
}

TEST(LaurentArithmetic, CoefficientsAreArbitraryPrecision) {
  const LaurentInt big = pow(LaurentInt(1) + q_power(1), 200);
  BigInt expected = 1;
  for (int k = 1; k <= 100; ++k) expected = expected * (201 - k) / k;
  EXPECT_EQ(big.coefficient(100), expected);
  EXPECT_EQ(big.eval_at_one(), BigInt(1) << 200);
}

TEST(LaurentText, RendersInDecreasingExponentOrder) {
  EXPECT_EQ(to_string(LaurentInt()), "0");
  EXPECT_EQ(to_string(LaurentInt(-7)), "-7");
  EXPECT_EQ(to_string(LaurentInt::monomial(2, 3)), "3q^2");
  EXPECT_EQ(to_string(LaurentInt::monomial(-1, -1)), "-q^-1");
  EXPECT_EQ(to_string(LaurentInt(1) + q_power(2)), "q^2 + 1");
  EXPECT_EQ(to_string(q_power(3) - q_power(-1)), "q^3 - q^-1");
  EXPECT_EQ(to_string(LaurentInt(1) - q_power(-4)), "1 - q^-4");
}

TEST(LaurentText, ParseAcceptsRenderingAndExpressions) {
  EXPECT_EQ(L("q^2 + 1 + q^-2"), q_int(3));
  EXPECT_EQ(L("-(q + q^-1)"), q_int(-2));
  EXPECT_EQ(L("1 + q^2"), LaurentInt(1) + q_power(2));
  EXPECT_EQ(L("(q + q^-1)^2"), pow(q_int(2), 2));
  EXPECT_EQ(L("3q^2"), LaurentInt::monomial(2, 3));
  EXPECT_EQ(L("2*q*q"), LaurentInt::monomial(2, 2));
  EXPECT_EQ(L("0"), LaurentInt());
}

TEST(LaurentText, RoundTripOnRandomValues) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentInt a = random_laurent(rng, 5);
    EXPECT_EQ(L(to_string(a)), a) << to_string(a);
  }
}

TEST(LaurentText, ErrorsCarryTokenAndPosition) {
  try {
    L("q + x");
    FAIL() << "letters are not coefficients";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
  try {
    L("1 + $");
    FAIL() << "bad character accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "$");
    EXPECT_EQ(e.position(), 4U);
  }
  EXPECT_THROW(L("(q + 1"), ParseError);
  EXPECT_THROW(L(""), ParseError);
  EXPECT_THROW(L("q^"), ParseError);
}

}  // namespace
}  // namespace qshuffle
