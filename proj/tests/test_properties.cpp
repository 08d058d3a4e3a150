#include <gtest/gtest.h>

#include "generators.hpp"
#include "rpv/bigapprox.hpp"
#include "rpv/errors.hpp"
#include "rpv/hyper.hpp"
#include "rpv/series.hpp"
#include "rpv/transforms.hpp"

namespace rpv {
namespace {

using testing::Gen;

constexpr int kCases = 60;
constexpr int kOrder = 10;

// Formal power series ring laws.

TEST(FpsRing, AdditionCommutesAndAssociates) {
  Gen g(1);
  for (int i = 0; i < kCases; ++i) {
    Series a = g.series(kOrder), b = g.series(kOrder), c = g.series(kOrder);
    EXPECT_EQ(fps_add(a, b), fps_add(b, a));
    EXPECT_EQ(fps_add(fps_add(a, b), c), fps_add(a, fps_add(b, c)));
    EXPECT_EQ(fps_sub(fps_add(a, b), b), a);
  }
}

TEST(FpsRing, MultiplicationCommutesAndAssociates) {
  Gen g(2);
  for (int i = 0; i < kCases; ++i) {
    Series a = g.series(kOrder), b = g.series(kOrder), c = g.series(kOrder);
    EXPECT_EQ(fps_mul(a, b), fps_mul(b, a));
    EXPECT_EQ(fps_mul(fps_mul(a, b), c), fps_mul(a, fps_mul(b, c)));
  }
}

TEST(FpsRing, Distributes) {
  Gen g(3);
  for (int i = 0; i < kCases; ++i) {
    Series a = g.series(kOrder), b = g.series(kOrder), c = g.series(kOrder);
    EXPECT_EQ(fps_mul(a, fps_add(b, c)), fps_add(fps_mul(a, b), fps_mul(a, c)));
  }
}

TEST(FpsRing, IdentitiesAndInverse) {
  Gen g(4);
  Series one = Series::one(kOrder), zero = Series::zero(kOrder);
  for (int i = 0; i < kCases; ++i) {
    Series a = g.series(kOrder);
    EXPECT_EQ(fps_mul(a, one), a);
    EXPECT_EQ(fps_add(a, zero), a);
    Series u = g.unit_series(kOrder);
    u = fps_scale(u, g.nonzero_rational());
    EXPECT_EQ(fps_mul(u, fps_inverse(u)), one);
  }
}

TEST(FpsRing, OrderIsMinimumOfOperands) {
  Gen g(5);
  Series a = g.series(6), b = g.series(9);
  EXPECT_EQ(fps_mul(a, b).order(), 6);
  EXPECT_EQ(fps_add(a, b).order(), 6);
  EXPECT_EQ(fps_mul(a, b), fps_mul(a, b.truncate(6)));
}

TEST(FpsRing, CompositionAssociatesAndMultiplies) {
  Gen g(6);
  for (int i = 0; i < kCases / 3; ++i) {
    Series a = g.series(8), b = g.series(8, true), c = g.series(8, true), d = g.series(8);
    EXPECT_EQ(fps_compose(fps_compose(a, b), c), fps_compose(a, fps_compose(b, c)));
    EXPECT_EQ(fps_compose(fps_mul(a, d), b), fps_mul(fps_compose(a, b), fps_compose(d, b)));
    EXPECT_EQ(fps_compose(a, Series::x(8)), a);
  }
}

TEST(FpsRing, RationalPowersCompose) {
  Gen g(7);
  for (int i = 0; i < kCases / 2; ++i) {
    Series u = g.unit_series(kOrder);
    Rational e1 = g.rational(5, 4), e2 = g.rational(5, 4);
    EXPECT_EQ(fps_mul(fps_pow_rational(u, e1), fps_pow_rational(u, e2)), fps_pow_rational(u, e1 + e2));
    Series h = fps_pow_rational(u, Rational(1, 2));
    EXPECT_EQ(fps_mul(h, h), u);
    EXPECT_EQ(fps_pow_rational(u, Rational(-1)), fps_inverse(u));
  }
}

TEST(FpsRing, RationalFunctionExpansionTimesDenominator) {
  Gen g(8);
  for (int i = 0; i < kCases; ++i) {
    Poly num = g.poly(4);
    std::vector<Rational> dc = g.poly(3).coeffs();
    if (dc.empty()) dc.push_back(Rational(1));
    dc[0] = g.nonzero_rational();
    Poly den(dc);
    Series q = fps_expand_ratfun(num, den, kOrder);
    EXPECT_EQ(fps_mul(q, Series::from_poly(den, kOrder)), Series::from_poly(num, kOrder));
  }
}

// theta = x d/dx is a derivation.

TEST(ThetaDerivation, LeibnizRule) {
  Gen g(9);
  for (int i = 0; i < kCases; ++i) {
    Series a = g.series(kOrder), b = g.series(kOrder);
    EXPECT_EQ(fps_theta(fps_mul(a, b)), fps_add(fps_mul(fps_theta(a), b), fps_mul(a, fps_theta(b))));
  }
}

TEST(ThetaDerivation, LinearAndKillsConstants) {
  Gen g(10);
  for (int i = 0; i < kCases; ++i) {
    Series a = g.series(kOrder), b = g.series(kOrder);
    Rational s = g.rational();
    EXPECT_EQ(fps_theta(fps_add(a, fps_scale(b, s))), fps_add(fps_theta(a), fps_scale(fps_theta(b), s)));
  }
  EXPECT_EQ(fps_theta(Series::one(kOrder)), Series::zero(kOrder));
}

TEST(ThetaDerivation, PowerRule) {
  Gen g(11);
  for (int i = 0; i < kCases / 2; ++i) {
    Series u = g.unit_series(kOrder);
    Rational e = g.rational(7, 4);
    Series lhs = fps_theta(fps_pow_rational(u, e));
    Series rhs = fps_scale(fps_mul(fps_pow_rational(u, e - Rational(1)), fps_theta(u)), e);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(ThetaDerivation, ChainRuleOnComposition) {
  Gen g(12);
  for (int i = 0; i < kCases / 3; ++i) {
    Series f = g.series(8), a = g.series(8, true);
    // theta(f(A)) = f'(A) theta(A), with f' built as theta(f)/x shifted.
    std::vector<Rational> d;
    for (int k = 1; k <= 8; ++k) d.push_back(f[k] * Rational(k));
    d.push_back(Rational(0));
    Series fprime(d);
    EXPECT_EQ(fps_theta(fps_compose(f, a)), fps_mul(fps_compose(fprime, a), fps_theta(a)));
  }
}

// Pochhammer symbols and coefficient streams against independent products.

Rational rising(const Rational& a, unsigned long n) {
  Rational p(1);
  for (unsigned long k = 0; k < n; ++k) p *= a + Rational(static_cast<long>(k));
  return p;
}

TEST(PochhammerOracle, MatchesProductAndRecurrences) {
  Gen g(13);
  for (int i = 0; i < kCases; ++i) {
    Rational a = g.rational(30, 12);
    unsigned long n = static_cast<unsigned long>(g.integer(0, 15));
    EXPECT_EQ(pochhammer(a, n), rising(a, n));
    EXPECT_EQ(pochhammer(a, n + 1), pochhammer(a, n) * (a + Rational(static_cast<long>(n))));
    EXPECT_EQ(pochhammer(a, n + 1), a * pochhammer(a + Rational(1), n));
  }
  for (unsigned long n = 0; n < 20; ++n) EXPECT_EQ(pochhammer(Rational(1), n), Rational(factorial(n)));
  EXPECT_EQ(pochhammer(Rational(-3), 4), Rational(0));
  EXPECT_EQ(pochhammer(Rational(-3), 3), Rational(-6));
}

TEST(CoeffOracle, HyperTermsMatchFactorialForms) {
  for (unsigned long n = 0; n < 25; ++n) {
    Rational fn(factorial(n));
    BigInt c2 = binomial(2 * n, n);
    EXPECT_EQ(coeff(CoeffFamily::hyper3F2(Rational(1, 2)), n),
              Rational(BigInt(c2 * c2 * c2)) / Rational(64).pow(static_cast<long>(n)));
    EXPECT_EQ(coeff(CoeffFamily::hyper3F2(Rational(1, 4)), n),
              Rational(factorial(4 * n)) / (fn.pow(4) * Rational(256).pow(static_cast<long>(n))));
    EXPECT_EQ(coeff(CoeffFamily::hyper3F2(Rational(1, 3)), n),
              Rational(BigInt(factorial(2 * n) * factorial(3 * n))) /
                  (fn.pow(5) * Rational(108).pow(static_cast<long>(n))));
    EXPECT_EQ(coeff(CoeffFamily::hyper3F2(Rational(1, 6)), n),
              Rational(factorial(6 * n)) /
                  (Rational(factorial(3 * n)) * fn.pow(3) * Rational(1728).pow(static_cast<long>(n))));
  }
}

TEST(CoeffOracle, RandomParametersMatchPochhammerQuotient) {
  Gen g(14);
  for (int i = 0; i < kCases / 2; ++i) {
    Rational s = g.unit_interval();
    unsigned long n = static_cast<unsigned long>(g.integer(0, 20));
    Rational fn(factorial(n));
    EXPECT_EQ(coeff(CoeffFamily::hyper3F2(s), n),
              rising(Rational(1, 2), n) * rising(s, n) * rising(Rational(1) - s, n) / fn.pow(3));
    Rational a = g.rational(9, 7), b = g.rational(9, 7), c = g.unit_interval() + Rational(g.integer(0, 3));
    EXPECT_EQ(coeff(CoeffFamily::hyper2F1(a, b, c), n), rising(a, n) * rising(b, n) / (rising(c, n) * fn));
  }
}

TEST(CoeffOracle, SquareIsCauchyProductOfGaussTerms) {
  Gen g(15);
  for (int i = 0; i < 10; ++i) {
    Rational s = g.unit_interval();
    auto st = coeff_stream(CoeffFamily::square2F1(s), 15);
    for (unsigned long n = 0; n <= 15; ++n) {
      Rational sum(0);
      for (unsigned long k = 0; k <= n; ++k) {
        auto f = [&](unsigned long j) {
          return rising(s, j) * rising(Rational(1) - s, j) / Rational(BigInt(factorial(j) * factorial(j)));
        };
        sum += f(k) * f(n - k);
      }
      EXPECT_EQ(st[n], sum);
    }
  }
}

TEST(CoeffOracle, DoubleSumFamiliesMatchDirectDefinitions) {
  for (const Rational& s : {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 6)}) {
    auto st = coeff_stream(CoeffFamily::convCentral(s), 25);
    for (unsigned long n = 0; n <= 25; ++n) EXPECT_EQ(st[n], conv_central_direct(s, n)) << s.str() << " " << n;
  }
  auto d = coeff_stream(CoeffFamily::domb(), 25);
  for (unsigned long n = 0; n <= 25; ++n) EXPECT_EQ(d[n], Rational(domb_direct(n)));
  auto t = coeff_stream(CoeffFamily::sunS2(), 25);
  for (unsigned long n = 0; n <= 25; ++n) EXPECT_EQ(t[n], Rational(sun_s2_direct(n)));
}

TEST(CoeffOracle, TermRatioMatchesConsecutiveCoefficients) {
  Gen g(16);
  for (int i = 0; i < 20; ++i) {
    Rational s = g.unit_interval();
    auto f = CoeffFamily::hyper3F2(s);
    auto hp = f.hyper_params();
    ASSERT_TRUE(hp.has_value());
    for (unsigned long n = 0; n < 12; ++n) EXPECT_EQ(coeff(f, n + 1), coeff(f, n) * hp->term_ratio(n));
  }
}

// RadConst field laws over one radical, multiplication across radicals.

TEST(RadConstAlgebra, MultiplicationIsACommutativeGroupOnNonzero) {
  Gen g(17);
  for (int i = 0; i < kCases * 2; ++i) {
    RadConst x = g.radconst(), y = g.radconst(), z = g.radconst();
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * RadConst(1), x);
    if (!x.is_zero()) EXPECT_EQ(x * x.inv(), RadConst(1));
    if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
  }
}

TEST(RadConstAlgebra, AdditionWithinOneRadical) {
  Gen g(18);
  for (int i = 0; i < kCases * 2; ++i) {
    long m = g.integer(1, 30);
    int t = static_cast<int>(g.integer(0, 1));
    RadConst x = g.radconst_in(m, t), y = g.radconst_in(m, t), z = g.radconst_in(m, t);
    RadConst w = g.radconst();
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x - x, RadConst(0));
    EXPECT_EQ(w * (x + y), w * x + w * y);
  }
}

TEST(RadConstAlgebra, TextRoundTripAndNormalForm) {
  Gen g(19);
  for (int i = 0; i < kCases * 2; ++i) {
    RadConst x = g.radconst({1, 2, 3, 4, 8, 12, 18, 50});
    EXPECT_EQ(RadConst::parse(x.str()), x) << x.str();
    if (!x.is_zero()) {
      auto [sq, f] = squarefree_split(x.m());
      EXPECT_EQ(sq, 1);
      EXPECT_EQ(f, x.m());
    }
  }
}

TEST(RadConstAlgebra, EmbeddingIsMultiplicative) {
  Gen g(20);
  const long bits = 200;
  for (int i = 0; i < kCases; ++i) {
    RadConst x = g.radconst_in(g.integer(1, 20), 0), y = g.radconst_in(g.integer(1, 20), 0);
    EXPECT_TRUE(agree(embed(x * y, bits), embed(x, bits) * embed(y, bits), 50));
  }
  for (int i = 0; i < kCases; ++i) {
    RadConst x = g.radconst(), y = g.radconst();
    EXPECT_TRUE(cagree(embed_complex(x * y, bits), cmul(embed_complex(x, bits), embed_complex(y, bits)), 50));
  }
}

TEST(RadConstAlgebra, HalfPowersFollowPrincipalBranch) {
  Gen g(21);
  for (int i = 0; i < kCases; ++i) {
    Rational q = g.nonzero_rational(40, 20);
    long k = g.integer(-5, 5);
    RadConst p = rational_pow_half(q, k);
    EXPECT_EQ(p * p, RadConst(q.pow(k)));
    EXPECT_EQ(rational_pow_half(q, k + 2), p * RadConst(q));
  }
  EXPECT_EQ(rational_pow_half(Rational(-4), 1), RadConst(Rational(2), BigInt(1), 1));
  EXPECT_EQ(rational_pow_half(Rational(-1, 3), -1), RadConst(Rational(-1), BigInt(3), 1));
}

}  // namespace
}  // namespace rpv
