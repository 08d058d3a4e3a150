#include "rpv/transforms.hpp"

#include "rpv/errors.hpp"
#include "rpv/pi.hpp"
#include "rpv/textio.hpp"

namespace rpv {

Prefactor Prefactor::parse(std::string_view text) {
  Prefactor p;
  std::string t = trim(text);
  if (t == "none" || t.empty()) return p;
  for (const auto& part : split(t, ';')) {
    if (part.empty()) continue;
    auto hat = part.rfind('^');
    if (hat == std::string::npos) throw ParseError("prefactor factor needs '^': '" + part + "'");
    Poly base = Poly::parse(trim(std::string_view(part).substr(0, hat)));
    Rational e = Rational::parse(trim(std::string_view(part).substr(hat + 1)));
    if (base.at(0) != Rational(1)) throw ParseError("prefactor base must have constant term 1: '" + part + "'");
    p.factors.emplace_back(std::move(base), e);
  }
  return p;
}

std::string Prefactor::str() const {
  if (factors.empty()) return "none";
  std::string out;
  for (const auto& [base, e] : factors) {
    if (!out.empty()) out += "; ";
    out += base.str() + "^" + e.str();
  }
  return out;
}

Series Prefactor::expand(int order) const {
  Series s = Series::one(order);
  for (const auto& [base, e] : factors) s = fps_mul(s, fps_pow_rational(Series::from_poly(base, order), e));
  return fps_scale(s, scale);
}

bool Prefactor::half_integral() const {
  for (const auto& [base, e] : factors)
    if (!(e * Rational(2)).is_integer()) return false;
  return true;
}

RadConst Prefactor::value_at(const Rational& x) const {
  RadConst v(scale);
  for (const auto& [base, e] : factors) {
    Rational twice = e * Rational(2);
    if (!twice.is_integer())
      throw UnrepresentableConstant("exponent " + e.str() + " leaves Q(sqrt m) at x = " + x.str());
    Rational pv = base.eval(x);
    if (pv.is_zero()) throw SingularPoint("prefactor base " + base.str() + " vanishes at x = " + x.str());
    v = v * rational_pow_half(pv, twice.num().get_si());
  }
  return v;
}

Rational Prefactor::log_deriv(const Rational& x) const {
  Rational s(0);
  for (const auto& [base, e] : factors) {
    Rational pv = base.eval(x);
    if (pv.is_zero()) throw SingularPoint("prefactor base " + base.str() + " vanishes at x = " + x.str());
    s += e * base.derivative().eval(x) / pv;
  }
  return s;
}

Prefactor Prefactor::inverse() const {
  Prefactor p;
  for (const auto& [base, e] : factors) p.factors.emplace_back(base, -e);
  p.scale = scale.inv();
  return p;
}

TransformRule inverse(const TransformRule& r) {
  TransformRule inv;
  inv.id = r.id + ":inv";
  inv.lhs = r.rhs;
  inv.rhs = r.lhs;
  inv.A = r.C;
  inv.C = r.A;
  inv.B = r.B.inverse();
  inv.validity_note = "inverse of " + r.id + "; " + r.validity_note;
  return inv;
}

namespace {

Series side(const CoeffFamily& f, const RatFun& arg, int order) {
  return fps_compose(family_series(f, order), fps_expand_ratfun(arg.num, arg.den, order));
}

}  // namespace

CheckResult verify_rule_formal(const TransformRule& r, int order) {
  Series lhs = side(r.lhs, r.A, order);
  Series rhs = fps_mul(r.B.expand(order), side(r.rhs, r.C, order));
  int mm = first_mismatch(lhs, rhs);
  return {mm < 0, mm};
}

NumericCheck verify_rule_numeric(const TransformRule& r, const Rational& x0, long digits) {
  long bits = working_bits(digits);
  NumericCheck out;
  BigApprox l = eval_numeric(r.lhs, 1, 0, r.A.eval(x0), digits);
  BigApprox t = eval_numeric(r.rhs, 1, 0, r.C.eval(x0), digits);
  out.lhs = {l, BigApprox(0, 0, bits)};
  out.rhs = cscale(embed_complex(r.B.value_at(x0), bits), t);
  out.pass = cagree(out.lhs, out.rhs, digits);
  return out;
}

std::vector<TransformRule> parse_rules(std::string_view text) {
  std::vector<TransformRule> out;
  for (const auto& b : parse_blocks(text)) {
    if (b.kind != "rule") throw ParseError("line " + std::to_string(b.line) + ": expected [rule <id>]");
    try {
      TransformRule r;
      r.id = b.id;
      r.lhs = CoeffFamily::parse(b.get("lhs_family"));
      r.rhs = CoeffFamily::parse(b.get("rhs_family"));
      r.A = RatFun{Poly::parse(b.get("A_num")), Poly::parse(b.get("A_den"))};
      r.C = RatFun{Poly::parse(b.get("C_num")), Poly::parse(b.get("C_den"))};
      r.B = Prefactor::parse(b.get("B_factors"));
      r.B.scale = Rational::parse(b.get_or("B_scale", "1"));
      r.validity_note = b.get_or("validity_note", "");
      if (r.A.den.at(0).is_zero() || r.C.den.at(0).is_zero())
        throw InvariantViolation("argument denominator vanishes at 0");
      if (!r.A.num.at(0).is_zero() || !r.C.num.at(0).is_zero()) throw InvariantViolation("A(0) and C(0) must be 0");
      if (r.B.scale != Rational(1)) throw InvariantViolation("B(0) must be 1");
      for (const auto& o : out)
        if (o.id == r.id) throw InvariantViolation("duplicate rule id");
      out.push_back(std::move(r));
    } catch (const InvariantViolation& e) {
      throw InvariantViolation("rule " + b.id + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError("rule " + b.id + ": " + e.what());
    }
  }
  return out;
}

std::vector<TransformRule> load_rules(const std::string& path) { return parse_rules(read_file(path)); }

const std::vector<TransformRule>& rule_catalog() {
  static const std::vector<TransformRule> rules = load_rules(data_path("rules.txt", "RPV_RULES"));
  return rules;
}

TransformRule find_rule(const std::vector<TransformRule>& rules, std::string_view id) {
  bool inv = false;
  std::string_view base = id;
  if (base.size() > 4 && base.substr(base.size() - 4) == ":inv") {
    inv = true;
    base.remove_suffix(4);
  }
  for (const auto& r : rules)
    if (r.id == base) return inv ? inverse(r) : r;
  throw UnknownId("no rule '" + std::string(id) + "'");
}

namespace {

TransformRule pfaff_rule(const Rational& a, const Rational& b, const Rational& c) {
  TransformRule r;
  r.id = "pfaff(" + a.str() + "," + b.str() + ";" + c.str() + ")";
  r.lhs = CoeffFamily::hyper2F1(a, b, c);
  r.rhs = CoeffFamily::hyper2F1(a, c - b, c);
  r.A = RatFun{Poly{0, 1}, Poly{1}};
  r.C = RatFun{Poly{0, 1}, Poly{-1, 1}};
  r.B.factors.emplace_back(Poly{1, -1}, -a);
  return r;
}

}  // namespace

CheckResult pfaff_twice_is_euler(const Rational& a, const Rational& b, const Rational& c, int order) {
  TransformRule first = pfaff_rule(a, b, c);
  // second step acts on F(c-b, a; c; y) with y = x/(x-1)
  TransformRule second = pfaff_rule(c - b, a, c);
  Series y = fps_expand_ratfun(first.C.num, first.C.den, order);
  Series inner = fps_mul(second.B.expand(order), side(second.rhs, second.C, order));
  Series twice = fps_mul(first.B.expand(order), fps_compose(inner, y));

  Prefactor euler;
  euler.factors.emplace_back(Poly{1, -1}, c - a - b);
  Series e = fps_mul(euler.expand(order), family_series(CoeffFamily::hyper2F1(c - a, c - b, c), order));
  int mm = first_mismatch(twice, e);
  if (mm < 0) mm = first_mismatch(twice, family_series(CoeffFamily::hyper2F1(a, b, c), order));
  return {mm < 0, mm};
}

}  // namespace rpv
