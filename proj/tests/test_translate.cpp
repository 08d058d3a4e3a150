#include <gtest/gtest.h>

#include "rpv/catalog.hpp"
#include "rpv/errors.hpp"
#include "rpv/pi.hpp"
#include "rpv/translate.hpp"

namespace rpv {
namespace {

const std::vector<CatalogEntry>& cat() {
  static const auto c = load_catalog(default_catalog_path());
  return c;
}

const SeriesSpec& src(const char* id) { return find_entry(cat(), id).spec; }

Certificate derive(const char* source, const char* rule, const Rational& x0) {
  return translate(src(source), find_rule(rule_catalog(), rule), x0);
}

struct Expected {
  const char* source;
  const char* rule;
  Rational x0;
  Rational a, b, z;
  RadConst c;
};

class Derivation : public ::testing::TestWithParam<Expected> {};

TEST_P(Derivation, ReproducesTripleExactly) {
  const Expected& e = GetParam();
  Certificate cert = derive(e.source, e.rule, e.x0);
  EXPECT_EQ(cert.derived.z, e.z);
  EXPECT_TRUE(projectively_equal(cert.derived.a, cert.derived.b, cert.derived.c, e.a, e.b, e.c))
      << cert.derived.a.str() << " " << cert.derived.b.str() << " " << cert.derived.c.str();
  EXPECT_EQ(cert.derived.status, Status::ProvedTranslation);
  EXPECT_TRUE(replay(cert, rule_catalog()));
}

INSTANTIATE_TEST_SUITE_P(
    FromSeeds, Derivation,
    ::testing::Values(
        Expected{"start-1/4", "pfaff-sq", Rational(1, 2), 1, 4, Rational(-1), 2},
        Expected{"start-1/2", "kum-sq", Rational(1, 2), 1, 6, Rational(-1, 8), RadConst(Rational(2), BigInt(2), 0)},
        Expected{"start-1/4", "gour28", Rational(1, 2), 3, 28, Rational(27, 125), RadConst(Rational(5), BigInt(5), 0)},
        Expected{"start-1/3", "gour22", Rational(1, 2), 2, 22, Rational(4, 125),
                 RadConst(Rational(5, 3), BigInt(15), 0)}));

INSTANTIATE_TEST_SUITE_P(
    FromFortyTwo, Derivation,
    ::testing::Values(
        Expected{"h4", "c3", Rational(1, 64), 8, 65, Rational(-256, 3969), RadConst(Rational(9), BigInt(7), 0)},
        Expected{"h4", "c4b", Rational(1, 64), 8, 63, Rational(-64, 125), RadConst(Rational(5), BigInt(15), 0)},
        Expected{"h4", "c4a", Rational(1, 64), 144, 2394, Rational(64, 614125),
                 RadConst(Rational(85, 3), BigInt(255), 0)},
        Expected{"t1", "c7", Rational(-1, 8), 31, 506, Rational(-9, 64000),
                 RadConst(Rational(160, 9), BigInt(30), 0)}));

TEST(Translate, ThetaCoefficientsMatchDirectDerivatives) {
  for (const char* id : {"c3", "c4a", "gour28", "kum-sq2"}) {
    TransformRule r = find_rule(rule_catalog(), id);
    for (const Rational& x0 : {Rational(1, 7), Rational(-1, 9), Rational(2, 11)}) {
      ThetaCoefficients t = theta_coefficients(r, x0);
      EXPECT_EQ(t.lambda, x0 * r.A.deriv(x0) / r.A.eval(x0));
      EXPECT_EQ(t.B, r.B.value_at(x0));
      EXPECT_EQ(t.nu, RadConst(x0 * r.C.deriv(x0) / r.C.eval(x0)) * t.B);
      EXPECT_EQ(t.mu, RadConst(x0 * r.B.log_deriv(x0)) * t.B);
    }
  }
}

TEST(Translate, DivergentOutputCarriesCertificateStatus) {
  Certificate c = derive("start-1/2", "kum-sq2", Rational(1, 2));
  EXPECT_EQ(c.derived.z, Rational(-8));
  EXPECT_TRUE(projectively_equal(c.derived.a, c.derived.b, c.derived.c, 1, 3, 1));
  EXPECT_EQ(c.derived.status, Status::DivergentCertificate);
}

TEST(Translate, RefusesMismatchedInputs) {
  EXPECT_THROW(derive("start-1/2", "kum-sq", Rational(1, 3)), ArgumentMismatch);
  EXPECT_THROW(derive("start-1/3", "kum-sq", Rational(1, 2)), ArgumentMismatch);
  EXPECT_THROW(translate(SeriesSpec{"s", CoeffFamily::hyper3F2(Rational(1, 2)), Rational(1), 1, 4, 2,
                                    Status::NumericOnly, ""},
                         find_rule(rule_catalog(), "c3"), Rational(1)),
               SingularPoint);
}

TEST(Translate, WarningRuleIsRefusedAndTheUngatedValueIsWrong) {
  TransformRule w = find_rule(rule_catalog(), "warn");
  EXPECT_THROW(translate(src("start-1/3"), w, Rational(1, 2)), BranchRefused);
  TranslateOptions loose;
  loose.enforce_gate = false;
  Certificate c = translate(src("start-1/3"), w, Rational(1, 2), loose);
  long bits = working_bits(20);
  BigApprox sum = eval_numeric(c.derived.family, c.derived.a, c.derived.b, c.derived.z, 20);
  EXPECT_TRUE(provably_differ(sum, embed(c.derived.c, bits) * inv_pi_bits(bits)));
  EXPECT_LT(c.derived.c.r() * c.derived.b.sign(), Rational(0));
}

TEST(Translate, CertificateTextRoundTrips) {
  Certificate c = derive("h4", "c3", Rational(1, 64));
  std::string text = certificate_text(c);
  auto parsed = parse_certificates(text);
  ASSERT_EQ(parsed.size(), 1u);
  EXPECT_EQ(certificate_text(parsed[0]), text);
  EXPECT_TRUE(replay(parsed[0], rule_catalog()));
  parsed[0].derived.c = RadConst(Rational(9), BigInt(5), 0);
  EXPECT_FALSE(replay(parsed[0], rule_catalog()));
}

TEST(SolveForX, RationalRootsOfTheArgumentMap) {
  RootReport a = solve_for_x(find_rule(rule_catalog(), "sun-s2").C, Rational(-1, 8));
  ASSERT_EQ(a.roots.size(), 1u);
  EXPECT_EQ(a.roots[0], Rational(1, 576));
  RootReport b = solve_for_x(find_rule(rule_catalog(), "c3").C, Rational(-16, 9));
  ASSERT_EQ(b.roots.size(), 2u);
  EXPECT_EQ(b.roots[0], Rational(1, 4));
  EXPECT_EQ(b.roots[1], Rational(4));
}

TEST(Projective, EqualityUpToOneRationalFactor) {
  RadConst c(Rational(5, 3), BigInt(15), 0);
  EXPECT_TRUE(projectively_equal(2, 22, c, 1, 11, RadConst(Rational(5, 6), BigInt(15), 0)));
  EXPECT_FALSE(projectively_equal(2, 22, c, 1, 11, c));
  EXPECT_FALSE(projectively_equal(2, 22, c, 2, 21, c));
  EXPECT_FALSE(projectively_equal(2, 22, c, 2, 22, RadConst(Rational(5, 3), BigInt(7), 0)));
}

TEST(Status, TextRoundTrip) {
  for (Status s : {Status::ProvedStart, Status::ProvedTranslation, Status::NumericOnly, Status::DivergentCertificate})
    EXPECT_EQ(parse_status(to_string(s)), s);
  EXPECT_EQ(to_string(Status::DivergentCertificate), "divergent-certificate");
  EXPECT_THROW(parse_status("proven"), ParseError);
}

}  // namespace
}  // namespace rpv
