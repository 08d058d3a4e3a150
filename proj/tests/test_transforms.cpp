#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "rpv/errors.hpp"
#include "rpv/transforms.hpp"

namespace rpv {
namespace {

const char* kRuleText = R"(
# test rule
[rule t]
lhs_family = square2F1(1/2)
rhs_family = hyper3F2(1/2)
A_num = [0, 1]
A_den = [1]
C_num = [0, 0, 1]
C_den = [-4, 4]
B_factors = [1, -1]^-1/2
B_scale = 1
validity_note = Kummer quadratic, squared
)";

std::string with(std::string text, const std::string& from, const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

TEST(Prefactor, ParseTextAndValues) {
  Prefactor p = Prefactor::parse("[1, -1]^-1/2; [1, 3]^1");
  EXPECT_EQ(Prefactor::parse(p.str()).str(), p.str());
  EXPECT_TRUE(p.half_integral());
  // (1 - 1/2)^(-1/2) (1 + 3/2) = 5 sqrt(2)/2
  EXPECT_EQ(p.value_at(Rational(1, 2)), RadConst(Rational(5, 2), BigInt(2), 0));
  EXPECT_EQ(p.log_deriv(Rational(1, 2)), Rational(1) + Rational(6, 5));
  EXPECT_EQ(Prefactor::parse("none").value_at(Rational(7)), RadConst(1));
  EXPECT_FALSE(Prefactor::parse("[1, -1]^-1/4").half_integral());
  EXPECT_THROW(Prefactor::parse("[1, -1]^-1/4").value_at(Rational(1, 2)), UnrepresentableConstant);
  EXPECT_THROW(p.value_at(Rational(1)), SingularPoint);
}

TEST(Prefactor, InverseMultipliesToOne) {
  Prefactor p = Prefactor::parse("[1, -4]^-1/2; [1, 8]^1");
  Series prod = fps_mul(p.expand(12), p.inverse().expand(12));
  EXPECT_EQ(prod, Series::one(12));
}

TEST(Rules, ParseShippedFormat) {
  auto rules = parse_rules(kRuleText);
  ASSERT_EQ(rules.size(), 1u);
  EXPECT_EQ(rules[0].id, "t");
  EXPECT_EQ(rules[0].lhs, CoeffFamily::square2F1(Rational(1, 2)));
  EXPECT_EQ(rules[0].validity_note, "Kummer quadratic, squared");
  EXPECT_TRUE(verify_rule_formal(rules[0], 24).pass);
}

TEST(Rules, ParseRejectsBrokenRules) {
  EXPECT_THROW(parse_rules(with(kRuleText, "A_num = [0, 1]", "A_num = [1, 1]")), InvariantViolation);
  EXPECT_THROW(parse_rules(with(kRuleText, "C_den = [-4, 4]", "C_den = [0, 4]")), InvariantViolation);
  EXPECT_THROW(parse_rules(with(kRuleText, "B_scale = 1", "B_scale = 2")), InvariantViolation);
  EXPECT_THROW(parse_rules(with(kRuleText, "A_den = [1]\n", "")), ParseError);
  EXPECT_THROW(parse_rules(std::string(kRuleText) + kRuleText), InvariantViolation);
  EXPECT_THROW(parse_rules(with(kRuleText, "[1, -1]^-1/2", "[1, -1]^0.5")), ParseError);
}

TEST(Rules, ShippedCatalogPassesFormally) {
  const auto& rules = rule_catalog();
  EXPECT_GE(rules.size(), 16u);
  std::set<std::string> ids;
  for (const auto& r : rules) {
    ids.insert(r.id);
    CheckResult c = verify_rule_formal(r, 64);
    EXPECT_TRUE(c.pass) << r.id << " fails at index " << c.first_mismatch;
  }
  EXPECT_EQ(ids.size(), rules.size());
}

TEST(Rules, InverseRulesAlsoHold) {
  for (const char* id : {"c3", "c4a", "sun-1/2", "rog8", "domb-rog"}) {
    TransformRule inv = find_rule(rule_catalog(), std::string(id) + ":inv");
    EXPECT_EQ(inv.id, std::string(id) + ":inv");
    EXPECT_TRUE(verify_rule_formal(inv, 32).pass) << id;
    TransformRule back = inverse(inv);
    TransformRule orig = find_rule(rule_catalog(), id);
    EXPECT_EQ(back.lhs, orig.lhs);
    EXPECT_EQ(back.rhs, orig.rhs);
    EXPECT_EQ(back.A.num, orig.A.num);
    EXPECT_EQ(back.C.den, orig.C.den);
    EXPECT_EQ(back.B.str(), orig.B.str());
  }
  EXPECT_THROW(find_rule(rule_catalog(), "no-such-rule"), UnknownId);
}

TEST(Rules, PlusHalfExponentInThirdClassFailsAtIndexOne) {
  TransformRule r = find_rule(rule_catalog(), "c3");
  r.B = Prefactor::parse("[1, -1]^1/2");
  CheckResult c = verify_rule_formal(r, 16);
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.first_mismatch, 1);
}

TEST(Rules, FourthClassExponentsBelongToTheirLevels) {
  TransformRule r3 = find_rule(rule_catalog(), "c4b");
  TransformRule r2 = find_rule(rule_catalog(), "c4b-2f1");
  std::swap(r3.B, r2.B);
  EXPECT_EQ(verify_rule_formal(r3, 16).first_mismatch, 1);
  EXPECT_EQ(verify_rule_formal(r2, 16).first_mismatch, 1);
}

TEST(Rules, WarningRuleHoldsFormallyButNotAtOneHalf) {
  TransformRule w = find_rule(rule_catalog(), "warn");
  EXPECT_TRUE(verify_rule_formal(w, 64).pass);
  // C(x) peaks near x = 0.049; the identity holds only below the peak.
  EXPECT_TRUE(verify_rule_numeric(w, Rational(1, 40), 30).pass);
  EXPECT_FALSE(verify_rule_numeric(w, Rational(1, 20), 30).pass);
  EXPECT_FALSE(verify_rule_numeric(w, Rational(1, 2), 30).pass);
}

TEST(Rules, NumericCheckOnConvergentPoints) {
  for (const char* id : {"c1a", "c3", "pfaff-sq", "kum-sq", "sun-1/2"}) {
    NumericCheck n = verify_rule_numeric(find_rule(rule_catalog(), id), Rational(1, 10), 30);
    EXPECT_TRUE(n.pass) << id;
  }
}

TEST(Rules, PfaffTwiceIsEulerForRandomParameters) {
  testing::Gen g(201);
  EXPECT_TRUE(pfaff_twice_is_euler(Rational(1, 2), Rational(1, 3), Rational(1), 32).pass);
  for (int i = 0; i < 12; ++i) {
    Rational a = g.rational(7, 5), b = g.rational(7, 5);
    Rational c = g.unit_interval() + Rational(g.integer(0, 2));
    EXPECT_TRUE(pfaff_twice_is_euler(a, b, c, 20).pass) << a.str() << " " << b.str() << " " << c.str();
  }
}

}  // namespace
}  // namespace rpv
