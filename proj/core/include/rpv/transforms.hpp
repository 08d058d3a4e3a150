#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rpv/bigapprox.hpp"
#include "rpv/hyper.hpp"
#include "rpv/poly.hpp"
#include "rpv/radconst.hpp"
#include "rpv/series.hpp"

namespace rpv {

// scale * prod base_i(x)^e_i, every base normalized to base(0) = 1.
struct Prefactor {
  std::vector<std::pair<Poly, Rational>> factors;
  Rational scale{1};

  // "[1,-1]^-1/2; [1,3]^1" or "none"
  static Prefactor parse(std::string_view text);
  std::string str() const;

  Series expand(int order) const;
  // Exact value; every exponent must be a half-integer.
  RadConst value_at(const Rational& x) const;
  // sum e_i p_i'(x)/p_i(x)
  Rational log_deriv(const Rational& x) const;
  bool half_integral() const;
  Prefactor inverse() const;
};

// sum t_n A(x)^n = B(x) sum u_n C(x)^n near x = 0.
struct TransformRule {
  std::string id;
  CoeffFamily lhs;
  CoeffFamily rhs;
  RatFun A;
  RatFun C;
  Prefactor B;
  std::string validity_note;
};

// Inverse direction: families and arguments swapped, prefactor inverted.
TransformRule inverse(const TransformRule& r);

CheckResult verify_rule_formal(const TransformRule& r, int order = 64);

struct NumericCheck {
  bool pass = false;
  CApprox lhs;  // sum t_n A(x0)^n
  CApprox rhs;  // B(x0) sum u_n C(x0)^n
};

// Point check at x0. Throws DivergentInput if either side cannot be summed
// and UnrepresentableConstant for non half-integral prefactors.
NumericCheck verify_rule_numeric(const TransformRule& r, const Rational& x0, long digits);

std::vector<TransformRule> parse_rules(std::string_view text);
std::vector<TransformRule> load_rules(const std::string& path);
// Shipped rule file (RPV_RULES overrides), loaded once.
const std::vector<TransformRule>& rule_catalog();
// "id" or "id:inv"; throws UnknownId.
TransformRule find_rule(const std::vector<TransformRule>& rules, std::string_view id);

// Pfaff on the first parameter, then on the other: compared with Euler's
// transformation and with F itself.
CheckResult pfaff_twice_is_euler(const Rational& a, const Rational& b, const Rational& c, int order = 32);

}  // namespace rpv
