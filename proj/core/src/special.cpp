#include "rpv/special.hpp"

#include <cmath>
#include <future>

#include "rpv/errors.hpp"
#include "rpv/pi.hpp"
#include "rpv/transforms.hpp"
#include "rpv/translate.hpp"

namespace rpv {

StartReport starting_formula(const Rational& s, long digits) {
  if (!(s > Rational(0) && s < Rational(1))) throw std::invalid_argument("s must lie in (0, 1)");
  StartReport rep;
  long bits = working_bits(digits);
  rep.lhs = eval_numeric(CoeffFamily::square2F1(s), 0, 1, Rational(1, 2), digits);
  SinPi sp = sin_pi(s, digits);
  rep.exact = sp.exact;
  if (sp.exact) rep.c = RadConst(2) * sp.value;
  rep.rhs = (sp.approx.with_bits(bits) * inv_pi_bits(bits)).mul_int(2);
  rep.pass = agree(rep.lhs, rep.rhs, digits);
  return rep;
}

namespace {

BigInt central_product(const Rational& s, unsigned long k) {
  if (s == Rational(1, 2)) return binomial(2 * k, k) * binomial(2 * k, k);
  if (s == Rational(1, 3)) return binomial(2 * k, k) * binomial(3 * k, k);
  if (s == Rational(1, 4)) return binomial(4 * k, 2 * k) * binomial(2 * k, k);
  if (s == Rational(1, 6)) return binomial(6 * k, 3 * k) * binomial(3 * k, k);
  throw UnsupportedFamily("no central binomial form for s = " + s.str());
}

long natural_base(const Rational& s) {
  if (s == Rational(1, 2)) return 32;
  if (s == Rational(1, 3)) return 54;
  if (s == Rational(1, 4)) return 128;
  if (s == Rational(1, 6)) return 864;
  throw UnsupportedFamily("no central binomial form for s = " + s.str());
}

}  // namespace

BinomialCheck corollary_binomial_check(const Rational& s, int n_max, long base) {
  if (base == 0) base = natural_base(s);
  auto c = coeff_stream(CoeffFamily::square2F1(s), n_max);
  std::vector<BigInt> f(n_max + 1);
  for (int k = 0; k <= n_max; ++k) f[k] = central_product(s, static_cast<unsigned long>(k));
  BinomialCheck out;
  for (int n = 0; n <= n_max; ++n) {
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) sum += f[k] * f[n - k];
    if (Rational(sum) / Rational(base).pow(n) != c[n] / Rational(2).pow(n)) {
      out.first_fail = n;
      return out;
    }
  }
  out.pass = true;
  return out;
}

const std::vector<LimitSpec>& limit_catalog() {
  static const std::vector<LimitSpec> specs = [] {
    std::vector<LimitSpec> v;
    RatFun quad{Poly{0, 4, -4}, Poly{1}};
    RatFun start_w{Poly{1, -2}, Poly{1, -1}};
    const std::pair<Rational, RadConst> starts[] = {{Rational(1, 2), RadConst(2)},
                                                    {Rational(1, 3), RadConst(1, 3, 0)},
                                                    {Rational(1, 4), RadConst(1, 2, 0)},
                                                    {Rational(1, 6), RadConst(1)}};
    for (const auto& [s, c] : starts)
      v.push_back({"start-" + s.str(), CoeffFamily::hyper3F2(s), start_w, quad, Rational(1, 2), Side::Left, c});
    v.push_back({"8x+1", CoeffFamily::hyper3F2(Rational(1, 6)), RatFun{Poly{1, 8}, Poly{1}},
                 RatFun{Poly{0, 27}, Poly{-1, 12, -48, 64}}, Rational(-1, 8), Side::Right,
                 RadConst(Rational(1, 2), 3, 0)});
    v.push_back({"x+1", CoeffFamily::hyper3F2(Rational(1, 4)), RatFun{Poly{1, 1}, Poly{1}},
                 RatFun{Poly{0, -4}, Poly{1, -2, 1}}, Rational(-1), Side::Right, RadConst(1, 2, 0)});
    v.push_back({"x+8", CoeffFamily::hyper3F2(Rational(1, 6)), RatFun{Poly{8, 1}, Poly{1}},
                 RatFun{Poly{0, 0, 27}, Poly{64, -48, 12, -1}}, Rational(-8), Side::Right, RadConst(4, 3, 0),
                 Rational(32)});
    return v;
  }();
  return specs;
}

const LimitSpec& find_limit(std::string_view id) {
  for (const auto& s : limit_catalog())
    if (s.id == id) return s;
  throw UnknownId("no limit '" + std::string(id) + "'");
}

namespace {

// w * sum n t_n y^n in long double; the ratio of consecutive n t_n y^n is
// at most |y| for these families, so the tail after a term is <= term |y|/(1-|y|).
long double weighted_theta_sum(const HyperParams& hp, long double y, long double w, unsigned long budget) {
  std::vector<long double> up, lo;
  for (const auto& u : hp.upper) up.push_back(u.to_long_double());
  for (const auto& l : hp.lower) lo.push_back(l.to_long_double());
  long double ay = std::fabs(y);
  if (!(ay < 1.0L)) throw DivergentInput("limit path left the disc of convergence");
  long double tail_factor = ay / (1.0L - ay);
  long double p = 1.0L;  // t_n y^n
  long double sum = 0.0L;
  for (unsigned long n = 0;; ++n) {
    long double r = 1.0L;
    long double nn = static_cast<long double>(n);
    for (long double u : up) r *= nn + u;
    for (long double l : lo) r /= nn + l;
    r /= nn + 1.0L;
    p *= r * y;
    long double term = static_cast<long double>(n + 1) * p;
    sum += term;
    if (std::fabs(term) * tail_factor < 1e-22L * std::fabs(sum)) break;
    if (budget-- == 0) throw NoConvergenceDetected("term budget exhausted on the limit path");
  }
  return w * sum;
}

}  // namespace

LimitReport limit_eval(const LimitSpec& spec, long double tolerance, const LimitOptions& opts) {
  auto hp = spec.family.hyper_params();
  if (!hp) throw UnsupportedFamily("limit evaluation needs a hypergeometric family");
  LimitReport rep;
  long bits = working_bits(25);
  rep.target = (embed(spec.target, bits) * inv_pi_bits(bits)).to_long_double();
  auto point = [&](int k) {
    Rational h = spec.step_scale * opts.delta0 / Rational(2).pow(k);
    Rational x = spec.side == Side::Left ? spec.x_star - h : spec.x_star + h;
    return weighted_theta_sum(*hp, spec.argument.eval(x).to_long_double(), spec.weight.eval(x).to_long_double(),
                              opts.term_budget);
  };
  int jobs = std::max(1, opts.jobs);
  std::vector<long double> values;
  std::vector<std::vector<long double>> table;
  long double prev = 0;
  for (int k = 0; k <= opts.k_max; ++k) {
    if (k == static_cast<int>(values.size())) {
      std::vector<std::future<long double>> batch;
      for (int j = k; j < std::min(k + jobs, opts.k_max + 1); ++j)
        batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, point, j));
      for (auto& f : batch) values.push_back(f.get());
    }
    long double f = values[k];
    std::vector<long double> row{f};
    int depth = std::min(k, opts.order);
    for (int j = 1; j <= depth; ++j) {
      long double denom = std::ldexp(1.0L, j) - 1.0L;
      row.push_back(row[j - 1] + (row[j - 1] - table[k - 1][j - 1]) / denom);
    }
    long double est = row.back();
    table.push_back(std::move(row));
    rep.ladder.push_back(est);
    rep.levels = k + 1;
    if (k > opts.order && std::fabs(est - prev) < tolerance / 4) {
      rep.value = est;
      rep.error = std::fabs(est - rep.target);
      rep.pass = rep.error <= tolerance;
      return rep;
    }
    prev = est;
  }
  throw NoConvergenceDetected("limit " + spec.id + " did not settle by k = " + std::to_string(opts.k_max));
}

S2Row sun_s2_row(unsigned long n) {
  S2Row row;
  row.n = n;
  row.convolution = sun_s2_direct(n);
  Rational nn{BigInt(n)};
  // Backward Horner on integer ratios P_k/Q_k, one reduction at the end.
  auto finite = [&](const HyperParams& hp) {
    BigInt num = 1, den = 1;
    for (unsigned long k = n; k-- > 0;) {
      BigInt pk = 1, qk = BigInt(k + 1);
      Rational kk{BigInt(k)};
      for (const auto& u : hp.upper) {
        Rational v = kk + u;
        pk *= v.num();
        qk *= v.den();
      }
      for (const auto& l : hp.lower) {
        Rational v = kk + l;
        qk *= v.num();
        pk *= v.den();
      }
      num = qk * den + pk * num;
      den *= qk;
    }
    return Rational(num) / Rational(den);
  };
  Rational half(1, 2), q(1, 4), tq(3, 4);
  BigInt c2 = binomial(2 * n, n);
  row.form_3f2 = Rational(BigInt(c2 * c2)) * Rational(4).pow(static_cast<long>(n)) *
                 finite(HyperParams{{half, half, -nn}, {Rational(1), half - nn}});
  row.form_4f3 = Rational(BigInt(c2 * binomial(4 * n, 2 * n))) *
                 finite(HyperParams{{q, tq, -nn, -nn}, {Rational(1), q - nn, tq - nn}});
  BigInt s = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    BigInt p4;
    mpz_ui_pow_ui(p4.get_mpz_t(), 4, n - k);
    s += binomial(2 * k, k) * binomial(2 * (n - k), n - k) * p4;
  }
  row.printed = c2 * s;
  return row;
}

S2Report sun_S2_identity(int n_max) {
  S2Report rep;
  for (int n = 0; n <= n_max; ++n) {
    S2Row row = sun_s2_row(static_cast<unsigned long>(n));
    Rational conv(row.convolution);
    if (rep.first_fail < 0 && (row.form_3f2 != conv || row.form_4f3 != conv)) rep.first_fail = n;
    if (rep.printed_first_mismatch < 0 && row.printed != row.convolution) rep.printed_first_mismatch = n;
  }
  rep.pass = rep.first_fail < 0;
  return rep;
}

namespace {

SunReport numeric_and_transport(const CoeffFamily& fam, const Rational& a, const Rational& b, const Rational& z,
                                const RadConst& c, long digits, const SeriesSpec& source, const char* rule,
                                const Rational& x0) {
  SunReport rep;
  long bits = working_bits(digits);
  rep.value = eval_numeric(fam, a, b, z, digits);
  rep.target = embed(c, bits) * inv_pi_bits(bits);
  rep.numeric = agree(rep.value, rep.target, digits);
  try {
    Certificate cert = translate(source, find_rule(rule_catalog(), rule), x0);
    const SeriesSpec& d = cert.derived;
    rep.transport = d.family == fam && d.z == z && projectively_equal(a, b, c, d.a, d.b, d.c);
    rep.detail = "transport " + source.id + " via " + rule + " at " + x0.str() + " gives (" + d.a.str() + ", " +
                 d.b.str() + ", " + d.z.str() + ", " + d.c.str() + ")";
  } catch (const Error& e) {
    rep.detail = e.what();
  }
  return rep;
}

SeriesSpec spec(const char* id, const CoeffFamily& f, const Rational& z, long a, long b, const RadConst& c) {
  return SeriesSpec{id, f, z, a, b, c, Status::NumericOnly, ""};
}

}  // namespace

SunReport sun_2_11(long digits) {
  return numeric_and_transport(CoeffFamily::sunS2(), 1, 4, Rational(-1, 192), RadConst(1, 3, 0), digits,
                               spec("h3", CoeffFamily::hyper3F2(Rational(1, 2)), Rational(1, 4), 1, 6, 4),
                               "sun-s2:inv", Rational(-1, 192));
}

SunReport sun_4_14(long digits, const Rational& a, const Rational& b) {
  CoeffFamily fam = CoeffFamily::product2F1(Rational(1, 3), Rational(1, 6), Rational(2, 3), Rational(5, 6));
  return numeric_and_transport(fam, a, b, Rational(1, 2), RadConst(Rational(3, 2), 6, 0), digits,
                               spec("t6", CoeffFamily::hyper3F2(Rational(1, 3)), Rational(1, 2), 1, 6, RadConst(3, 3, 0)),
                               "prod-euler:inv", Rational(1, 2));
}

SunReport rogers_domb_check(long digits, int order) {
  SunReport rep = numeric_and_transport(
      CoeffFamily::domb(), 3, 16, Rational(1, 100), RadConst(Rational(25, 3), 3, 0), digits,
      spec("q9", CoeffFamily::hyper3F2(Rational(1, 4)), Rational(1, 2401), 3, 40, RadConst(Rational(49, 9), 3, 0)),
      "domb-rog", Rational(1, 9));
  CheckResult f = verify_rule_formal(find_rule(rule_catalog(), "domb"), order);
  if (!f.pass) {
    rep.transport = false;
    rep.detail += "; Domb rule fails formally at index " + std::to_string(f.first_mismatch);
  }
  return rep;
}

std::vector<Rational> sun_arguments() {
  RatFun c{Poly{0, 64}, Poly{-1, 64}};
  std::vector<Rational> out;
  for (const Rational& z : {Rational(-1), Rational(-1, 8), Rational(1, 64), Rational(4), Rational(-8), Rational(64)}) {
    auto r = solve_for_x(c, z);
    out.insert(out.end(), r.roots.begin(), r.roots.end());
  }
  return out;
}

}  // namespace rpv
