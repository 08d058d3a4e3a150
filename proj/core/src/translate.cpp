#include "rpv/translate.hpp"

#include <map>
#include <mutex>

#include "rpv/errors.hpp"
#include "rpv/pi.hpp"
#include "rpv/textio.hpp"

namespace rpv {

std::string to_string(Status s) {
  switch (s) {
    case Status::ProvedStart: return "proved-start";
    case Status::ProvedTranslation: return "proved-translation";
    case Status::NumericOnly: return "numeric-only";
    case Status::DivergentCertificate: return "divergent-certificate";
  }
  return "?";
}

Status parse_status(std::string_view text) {
  for (Status s : {Status::ProvedStart, Status::ProvedTranslation, Status::NumericOnly, Status::DivergentCertificate})
    if (to_string(s) == text) return s;
  throw ParseError("unknown status '" + std::string(text) + "'");
}

bool projectively_equal(const Rational& a1, const Rational& b1, const RadConst& c1, const Rational& a2,
                        const Rational& b2, const RadConst& c2) {
  Rational k;
  if (!b1.is_zero()) {
    k = b2 / b1;
  } else if (!a1.is_zero()) {
    k = a2 / a1;
  } else {
    return false;
  }
  return a2 == k * a1 && b2 == k * b1 && c2 == RadConst(k) * c1;
}

ThetaCoefficients theta_coefficients(const TransformRule& r, const Rational& x0) {
  Rational av = r.A.eval(x0), cv = r.C.eval(x0);
  if (av.is_zero() || cv.is_zero()) throw SingularPoint("A or C vanishes at x0 = " + x0.str());
  ThetaCoefficients t;
  t.lambda = x0 * r.A.deriv(x0) / av;
  t.B = r.B.value_at(x0);
  t.mu = t.B * RadConst(x0 * r.B.log_deriv(x0));
  t.nu = t.B * RadConst(x0 * r.C.deriv(x0) / cv);
  return t;
}

namespace {

std::string rule_key(const TransformRule& r) {
  return r.id + "|" + r.lhs.str() + "|" + r.rhs.str() + "|" + r.A.str() + "|" + r.C.str() + "|" + r.B.str();
}

bool formal_ok(const TransformRule& r, int order) {
  static std::mutex mu;
  static std::map<std::string, bool> cache;
  std::string key = rule_key(r) + "#" + std::to_string(order);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  bool ok = verify_rule_formal(r, order).pass;
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = ok;
  return ok;
}

// Numeric branch check at x0: the identity itself and its theta image.
void gate(const SeriesSpec& src, const TransformRule& r, const Rational& x0, const ThetaCoefficients& th,
          long digits) {
  const std::string where = "rule " + r.id + " at x0 = " + x0.str();
  try {
    NumericCheck nc = verify_rule_numeric(r, x0, digits);
    if (!nc.pass)
      throw BranchRefused(where + ": sides differ numerically (" + nc.lhs.re.to_decimal(12) + " vs " +
                          nc.rhs.re.to_decimal(12) + (nc.rhs.im.sign_known() ? " + imaginary part" : "") +
                          "); the right side is on another branch");
    long bits = working_bits(digits);
    Rational zp = r.C.eval(x0);
    BigApprox s1 = eval_numeric(src.family, 0, 1, src.z, digits);
    BigApprox t0 = eval_numeric(r.rhs, 1, 0, zp, digits);
    BigApprox t1 = eval_numeric(r.rhs, 0, 1, zp, digits);
    CApprox lhs{s1.mul_rational(th.lambda), BigApprox(0, 0, bits)};
    CApprox rhs = cadd(cscale(embed_complex(th.mu, bits), t0), cscale(embed_complex(th.nu, bits), t1));
    if (!cagree(lhs, rhs, digits)) throw BranchRefused(where + ": theta image of the identity fails numerically");
  } catch (const DivergentInput& e) {
    throw BranchRefused(where + ": cannot check the branch numerically (" + e.what() + ")");
  }
}

}  // namespace

Certificate translate(const SeriesSpec& source, const TransformRule& rule, const Rational& x0,
                      const TranslateOptions& opts) {
  if (!(source.family == rule.lhs))
    throw ArgumentMismatch("source family " + source.family.str() + " is not the rule's left family " + rule.lhs.str());
  if (rule.A.eval(x0) != source.z)
    throw ArgumentMismatch("A(" + x0.str() + ") = " + rule.A.eval(x0).str() + " but the source has z = " +
                           source.z.str());
  ThetaCoefficients th = theta_coefficients(rule, x0);
  if (th.lambda.is_zero()) throw SingularPoint("A'(x0) = 0 at x0 = " + x0.str());
  if (!formal_ok(rule, opts.formal_order))
    throw InvariantViolation("rule " + rule.id + " fails the formal check at order " + std::to_string(opts.formal_order));

  Rational zp = rule.C.eval(x0);
  bool divergent = classify(rule.rhs, zp) == Convergence::Outside;
  if (opts.enforce_gate && !divergent) gate(source, rule, x0, th, opts.gate_digits);

  // a B + b mu/lambda and b nu/lambda are both B times a rational.
  Rational alpha = source.a + source.b * x0 * rule.B.log_deriv(x0) / th.lambda;
  Rational beta = source.b * x0 * rule.C.deriv(x0) / (zp * th.lambda);
  if (alpha.is_zero() && beta.is_zero()) throw SingularPoint("transport collapses to zero at x0 = " + x0.str());
  BigInt l = lcm(alpha.den(), beta.den());
  BigInt ai = alpha.num() * (l / alpha.den()), bi = beta.num() * (l / beta.den());
  BigInt g = gcd(ai, bi);
  Rational kappa(l, g);
  if (beta.sign() < 0 || (beta.is_zero() && alpha.sign() < 0)) kappa = -kappa;

  Certificate cert;
  cert.source = source;
  cert.rule_id = rule.id;
  cert.x0 = x0;
  cert.theta = th;
  SeriesSpec& d = cert.derived;
  d.id = source.id + ">" + rule.id + "@" + x0.str();
  d.family = rule.rhs;
  d.z = zp;
  d.a = alpha * kappa;
  d.b = beta * kappa;
  d.c = RadConst(kappa) * source.c / th.B;
  d.status = divergent ? Status::DivergentCertificate : Status::ProvedTranslation;
  d.note = "from " + source.id + " by " + rule.id + " at x0 = " + x0.str();
  bool negative_base = false;
  for (const auto& [base, e] : rule.B.factors)
    if (base.eval(x0).sign() < 0 && !e.is_integer()) negative_base = true;
  cert.branch_note = negative_base ? "principal branch: (-q)^(k/2) = q^(k/2) i^k for q > 0" : "real branch";
  return cert;
}

namespace {

// p / (x - r), exact root assumed.
Poly deflate(const Poly& p, const Rational& r) {
  const auto& c = p.coeffs();
  int n = p.degree();
  std::vector<Rational> q(n);
  Rational carry(0);
  for (int i = n; i >= 1; --i) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return Poly(std::move(q));
}

}  // namespace

RootReport solve_for_x(const RatFun& C, const Rational& z) {
  Poly p = C.num - z * C.den;
  RootReport rep;
  if (p.is_zero()) return rep;
  rep.roots = rational_roots(p);
  Poly rest = p;
  for (const auto& r : rep.roots) {
    while (rest.degree() >= 1 && rest.eval(r).is_zero()) rest = deflate(rest, r);
  }
  // zero is never a root of interest here but rational_roots drops it
  while (rest.degree() >= 1 && rest.at(0).is_zero()) {
    rest = deflate(rest, 0);
  }
  rep.non_rational = std::max(0, rest.degree());
  // roots of C - z that also kill the denominator are spurious
  std::vector<Rational> keep;
  for (const auto& r : rep.roots)
    if (!C.den.eval(r).is_zero()) keep.push_back(r);
  rep.roots = keep;
  return rep;
}

bool replay(const Certificate& cert, const std::vector<TransformRule>& rules) {
  try {
    TransformRule r = find_rule(rules, cert.rule_id);
    TranslateOptions opts;
    opts.enforce_gate = false;
    Certificate again = translate(cert.source, r, cert.x0, opts);
    const SeriesSpec &x = again.derived, &y = cert.derived;
    return x.family == y.family && x.z == y.z && x.a == y.a && x.b == y.b && x.c == y.c && x.status == y.status &&
           again.theta.lambda == cert.theta.lambda && again.theta.mu == cert.theta.mu &&
           again.theta.nu == cert.theta.nu && again.theta.B == cert.theta.B;
  } catch (const Error&) {
    return false;
  }
}

std::string certificate_text(const Certificate& cert) {
  Block b{"certificate", cert.derived.id, 0, {}};
  auto put = [&](std::string k, std::string v) { b.fields.emplace_back(std::move(k), std::move(v)); };
  put("source", cert.source.id);
  put("source_family", cert.source.family.str());
  put("source_z", cert.source.z.str());
  put("source_a", cert.source.a.str());
  put("source_b", cert.source.b.str());
  put("source_c", cert.source.c.str());
  put("source_status", to_string(cert.source.status));
  put("rule", cert.rule_id);
  put("x0", cert.x0.str());
  put("lambda", cert.theta.lambda.str());
  put("mu", cert.theta.mu.str());
  put("nu", cert.theta.nu.str());
  put("B", cert.theta.B.str());
  put("family", cert.derived.family.str());
  put("z", cert.derived.z.str());
  put("a", cert.derived.a.str());
  put("b", cert.derived.b.str());
  put("c", cert.derived.c.str());
  put("status", to_string(cert.derived.status));
  put("branch", cert.branch_note);
  return write_blocks({b});
}

std::vector<Certificate> parse_certificates(std::string_view text) {
  std::vector<Certificate> out;
  for (const auto& b : parse_blocks(text)) {
    if (b.kind != "certificate") throw ParseError("line " + std::to_string(b.line) + ": expected [certificate <id>]");
    Certificate c;
    c.source.id = b.get("source");
    c.source.family = CoeffFamily::parse(b.get("source_family"));
    c.source.z = Rational::parse(b.get("source_z"));
    c.source.a = Rational::parse(b.get("source_a"));
    c.source.b = Rational::parse(b.get("source_b"));
    c.source.c = RadConst::parse(b.get("source_c"));
    c.source.status = parse_status(b.get("source_status"));
    c.rule_id = b.get("rule");
    c.x0 = Rational::parse(b.get("x0"));
    c.theta.lambda = Rational::parse(b.get("lambda"));
    c.theta.mu = RadConst::parse(b.get("mu"));
    c.theta.nu = RadConst::parse(b.get("nu"));
    c.theta.B = RadConst::parse(b.get("B"));
    c.derived.id = b.id;
    c.derived.family = CoeffFamily::parse(b.get("family"));
    c.derived.z = Rational::parse(b.get("z"));
    c.derived.a = Rational::parse(b.get("a"));
    c.derived.b = Rational::parse(b.get("b"));
    c.derived.c = RadConst::parse(b.get("c"));
    c.derived.status = parse_status(b.get("status"));
    c.branch_note = b.get_or("branch", "");
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace rpv
