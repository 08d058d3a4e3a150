#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "rpv/bigapprox.hpp"
#include "rpv/errors.hpp"
#include "rpv/pi.hpp"
#include "rpv/radconst.hpp"
#include "rpv/rational.hpp"

namespace rpv {
namespace {

TEST(Rational, ParsesStrictLiterals) {
  EXPECT_EQ(Rational::parse("-9/40"), Rational(-9, 40));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_THROW(Rational::parse("0.5"), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, TextRoundTrip) {
  testing::Gen g(101);
  for (int i = 0; i < 200; ++i) {
    Rational q = g.rational(100000, 9999);
    EXPECT_EQ(Rational::parse(q.str()), q);
  }
}

TEST(Rational, BinomialsAndFactorials) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(gbinomial(Rational(-1, 3), 2), Rational(2, 9));
}

TEST(RadConst, NormalizesSquareFactors) {
  EXPECT_EQ(RadConst(Rational(1), BigInt(12), 0), RadConst(Rational(2), BigInt(3), 0));
  EXPECT_EQ(RadConst(Rational(1), BigInt(4), 0), RadConst(2));
  EXPECT_TRUE(RadConst(Rational(3), BigInt(9), 0).is_rational());
}

TEST(RadConst, ParsesCatalogForms) {
  EXPECT_EQ(RadConst::parse("5*sqrt(15)"), RadConst(Rational(5), BigInt(15), 0));
  EXPECT_EQ(RadConst::parse("1/2*i"), RadConst(Rational(1, 2), BigInt(1), 1));
  EXPECT_EQ(RadConst::parse("-3*sqrt(2)*i"), RadConst(Rational(-3), BigInt(2), 1));
  EXPECT_EQ(RadConst::parse("16"), RadConst(16));
  EXPECT_THROW(RadConst::parse("2.5*sqrt(3)"), ParseError);
}

TEST(RadConst, IncompatibleSumThrows) {
  EXPECT_THROW(RadConst(Rational(1), BigInt(2), 0) + RadConst(Rational(1), BigInt(3), 0), IncompatibleRadicals);
  EXPECT_EQ(RadConst(0) + RadConst(Rational(1), BigInt(3), 0), RadConst(Rational(1), BigInt(3), 0));
}

TEST(BigApprox, ArithmeticTracksExactRationals) {
  testing::Gen g(102);
  const long bits = 256;
  for (int i = 0; i < 100; ++i) {
    Rational p = g.rational(1000, 97), q = g.nonzero_rational(1000, 97);
    auto P = BigApprox::from_rational(p, bits), Q = BigApprox::from_rational(q, bits);
    EXPECT_TRUE(agree(P + Q, BigApprox::from_rational(p + q, bits), 60));
    EXPECT_TRUE(agree(P * Q, BigApprox::from_rational(p * q, bits), 60));
    EXPECT_TRUE(agree(P / Q, BigApprox::from_rational(p / q, bits), 60));
  }
  auto two = BigApprox::from_int(2, bits);
  EXPECT_TRUE(agree(two.sqrt() * two.sqrt(), two, 70));
}

TEST(BigApprox, DecimalTruncation) {
  auto third = BigApprox::from_rational(Rational(1, 3), 128);
  EXPECT_EQ(third.to_decimal(10), "0.3333333333");
  EXPECT_EQ((-third).to_decimal(3), "-0.333");
  EXPECT_EQ(third.certified_decimal(10), "0.3333333333");
}

TEST(Pi, AgmOracleMatchesKnownPrefix) {
  EXPECT_EQ(pi_oracle(50).to_decimal(50), "3.14159265358979323846264338327950288419716939937510");
}

TEST(Pi, AgmAndMachinAgreeAtThousandDigits) {
  EXPECT_TRUE(agree(pi_oracle(1000).with_bits(working_bits(1000)), pi_machin(1000).with_bits(working_bits(1000)),
                    1000));
}

TEST(Pi, InversePi) {
  long bits = working_bits(40);
  EXPECT_TRUE(agree(inv_pi_bits(bits) * pi_agm_bits(bits), BigApprox::from_int(1, bits), 40));
}

TEST(Pi, ExactSines) {
  EXPECT_EQ(sin_pi_exact(Rational(1, 6)), RadConst(Rational(1, 2)));
  EXPECT_EQ(sin_pi_exact(Rational(1, 4)), RadConst(Rational(1, 2), BigInt(2), 0));
  EXPECT_EQ(sin_pi_exact(Rational(1, 3)), RadConst(Rational(1, 2), BigInt(3), 0));
  EXPECT_EQ(sin_pi_exact(Rational(1, 2)), RadConst(1));
  EXPECT_EQ(sin_pi_exact(Rational(5, 6)), RadConst(Rational(1, 2)));
  EXPECT_FALSE(sin_pi_exact(Rational(1, 5)).has_value());
}

TEST(Pi, SineApproximationMatchesLibm) {
  testing::Gen g(103);
  for (int i = 0; i < 30; ++i) {
    Rational s = g.unit_interval(60);
    SinPi v = sin_pi(s, 30);
    EXPECT_NEAR(v.approx.to_double(), std::sin(s.to_double() * M_PI), 1e-14) << s.str();
  }
}

TEST(Pi, WorkingBitsGrowWithDigits) {
  long prev = 0;
  for (long d : {1L, 10L, 100L, 1000L}) {
    long b = working_bits(d);
    EXPECT_GT(b, prev);
    EXPECT_GE(static_cast<double>(b), (d + kGuardDigits) * std::log2(10.0));
    prev = b;
  }
}

}  // namespace
}  // namespace rpv
