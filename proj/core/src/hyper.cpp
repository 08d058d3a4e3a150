#include "rpv/hyper.hpp"

#include <cmath>
#include <sstream>

#include "rpv/errors.hpp"
#include "rpv/pi.hpp"

namespace rpv {

Rational pochhammer(const Rational& a, unsigned long n) {
  Rational r(1);
  for (unsigned long k = 0; k < n; ++k) r *= a + Rational(static_cast<long>(k));
  return r;
}

Rational HyperParams::term_ratio(unsigned long n) const {
  Rational nn(static_cast<long>(n));
  Rational r(1);
  for (const auto& u : upper) r *= nn + u;
  for (const auto& l : lower) r /= nn + l;
  return r / (nn + Rational(1));
}

Rational HyperParams::term(unsigned long n) const {
  Rational t(1);
  for (unsigned long k = 0; k < n; ++k) t *= term_ratio(k);
  return t;
}

Series hyper_series(const HyperParams& p, int order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (int n = 0; n < order; ++n) c[n + 1] = c[n] * p.term_ratio(static_cast<unsigned long>(n));
  return Series(std::move(c));
}

namespace {

// (a)_k (b)_k / ((c)_k k!) w^k for k <= n
std::vector<Rational> f21_stream(const Rational& a, const Rational& b, const Rational& c, const Rational& w, int n) {
  HyperParams p{{a, b}, {c}};
  std::vector<Rational> out(n + 1);
  out[0] = 1;
  for (int k = 0; k < n; ++k) out[k + 1] = out[k] * p.term_ratio(static_cast<unsigned long>(k)) * w;
  return out;
}

std::vector<Rational> cauchy(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  Series s = fps_mul(Series(u), Series(v));
  return s.coeffs();
}

std::vector<std::string> split_args(std::string_view inner) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : inner) {
    if (ch == ',' || ch == ';') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

CoeffFamily CoeffFamily::parse(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  if (t == "domb") return domb();
  if (t == "sunS2") return sunS2();
  auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')') throw ParseError("unknown family '" + t + "'");
  std::string name = t.substr(0, open);
  std::vector<Rational> args;
  for (const auto& a : split_args(std::string_view(t).substr(open + 1, t.size() - open - 2))) args.push_back(Rational::parse(a));
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw ParseError("family '" + t + "' expects " + std::to_string(n) + " parameters");
  };
  if (name == "hyper3F2") { need(1); return hyper3F2(args[0]); }
  if (name == "square2F1") { need(1); return square2F1(args[0]); }
  if (name == "convCentral") { need(1); return convCentral(args[0]); }
  if (name == "hyper2F1") { need(3); return hyper2F1(args[0], args[1], args[2]); }
  if (name == "product2F1") { need(4); return product2F1(args[0], args[1], args[2], args[3]); }
  throw ParseError("unknown family '" + t + "'");
}

std::string CoeffFamily::str() const {
  const auto& p = params;
  switch (kind) {
    case FamilyKind::Hyper3F2: return "hyper3F2(" + p[0].str() + ")";
    case FamilyKind::Square2F1: return "square2F1(" + p[0].str() + ")";
    case FamilyKind::ConvCentral: return "convCentral(" + p[0].str() + ")";
    case FamilyKind::Domb: return "domb";
    case FamilyKind::Hyper2F1: return "hyper2F1(" + p[0].str() + "," + p[1].str() + ";" + p[2].str() + ")";
    case FamilyKind::Product2F1:
      return "product2F1(" + p[0].str() + "," + p[1].str() + ";" + p[2].str() + "," + p[3].str() + ")";
    case FamilyKind::SunS2: return "sunS2";
  }
  return "?";
}

std::optional<Rational> CoeffFamily::s() const {
  switch (kind) {
    case FamilyKind::Hyper3F2:
    case FamilyKind::Square2F1:
    case FamilyKind::ConvCentral: return params[0];
    default: return std::nullopt;
  }
}

Rational CoeffFamily::rho() const {
  switch (kind) {
    case FamilyKind::ConvCentral: return 4;
    case FamilyKind::Domb: return 36;
    case FamilyKind::SunS2: return 64;
    default: return 1;
  }
}

bool CoeffFamily::hypergeometric() const {
  return kind == FamilyKind::Hyper3F2 || kind == FamilyKind::Hyper2F1;
}

std::optional<HyperParams> CoeffFamily::hyper_params() const {
  if (kind == FamilyKind::Hyper3F2) {
    const Rational& s = params[0];
    return HyperParams{{Rational(1, 2), s, Rational(1) - s}, {Rational(1), Rational(1)}};
  }
  if (kind == FamilyKind::Hyper2F1) return HyperParams{{params[0], params[1]}, {params[2]}};
  return std::nullopt;
}

std::vector<Rational> coeff_stream(const CoeffFamily& f, int n_max) {
  const auto& p = f.params;
  switch (f.kind) {
    case FamilyKind::Hyper3F2:
    case FamilyKind::Hyper2F1: return hyper_series(*f.hyper_params(), n_max).coeffs();
    case FamilyKind::Square2F1: {
      auto u = f21_stream(p[0], Rational(1) - p[0], 1, 1, n_max);
      return cauchy(u, u);
    }
    case FamilyKind::Product2F1:
      return cauchy(f21_stream(p[0], p[1], 1, 1, n_max), f21_stream(p[2], p[3], 1, 1, n_max));
    case FamilyKind::ConvCentral:
      // C(2k,k) C(-s,k) = (-4)^k (1/2)_k (s)_k / k!^2
      return cauchy(f21_stream(Rational(1, 2), p[0], 1, -4, n_max),
                    f21_stream(Rational(1, 2), Rational(1) - p[0], 1, -4, n_max));
    case FamilyKind::Domb: {
      std::vector<Rational> out(n_max + 1);
      for (int n = 0; n <= n_max; ++n) out[n] = Rational(domb_direct(static_cast<unsigned long>(n)));
      return out;
    }
    case FamilyKind::SunS2: {
      // C(2k,k) C(4k,2k) = 64^k (1/4)_k (3/4)_k / k!^2
      auto u = f21_stream(Rational(1, 4), Rational(3, 4), 1, 64, n_max);
      return cauchy(u, u);
    }
  }
  return {};
}

Rational coeff(const CoeffFamily& f, unsigned long n) {
  if (auto hp = f.hyper_params()) return hp->term(n);
  if (f.kind == FamilyKind::Domb) return Rational(domb_direct(n));
  return coeff_stream(f, static_cast<int>(n))[n];
}

Series family_series(const CoeffFamily& f, int order) { return Series(coeff_stream(f, order)); }

Rational conv_central_direct(const Rational& s, unsigned long n) {
  Rational sum(0);
  for (unsigned long k = 0; k <= n; ++k)
    sum += Rational(binomial(2 * k, k)) * gbinomial(-s, k) * Rational(binomial(2 * (n - k), n - k)) *
           gbinomial(s - Rational(1), n - k);
  return sum;
}

BigInt domb_direct(unsigned long n) {
  BigInt sum = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    BigInt c = binomial(n, k);
    sum += binomial(2 * k, k) * c * c;
  }
  return binomial(2 * n, n) * sum;
}

BigInt sun_s2_direct(unsigned long n) {
  BigInt sum = 0;
  for (unsigned long k = 0; k <= n; ++k)
    sum += binomial(2 * k, k) * binomial(4 * k, 2 * k) * binomial(4 * (n - k), 2 * (n - k)) *
           binomial(2 * (n - k), n - k);
  return sum;
}

Convergence classify(const CoeffFamily& f, const Rational& z) {
  Rational zr = z * f.rho();
  if (zr.abs() < Rational(1)) return Convergence::Inside;
  if (zr == Rational(-1) && f.hypergeometric()) return Convergence::AlternatingBoundary;
  return Convergence::Outside;
}

namespace {

Rational lin(const Rational& a, const Rational& b, unsigned long n) { return a + b * Rational(static_cast<long>(n)); }

Rational magnitude_weight(const Rational& a, const Rational& b, unsigned long n) {
  return a.abs() + b.abs() * Rational(static_cast<long>(n + 1));
}

BigInt units_of(const Rational& q, long bits) {
  BigInt n = ::abs(q.num()) << bits, r;
  mpz_cdiv_q(r.get_mpz_t(), n.get_mpz_t(), q.den().get_mpz_t());
  return r;
}

BigInt units_of(const BigApprox& x, const Rational& factor) {
  BigInt n = (::abs(x.mant()) + x.err()) * ::abs(factor.num()), r;
  mpz_cdiv_q(r.get_mpz_t(), n.get_mpz_t(), factor.den().get_mpz_t());
  return r;
}

BigInt pow10(long d) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(d));
  return r;
}

// Tail target: bound below 10^-(digits + guard/2) in units of 2^-bits.
bool tail_small(const BigInt& units, long bits, long digits) {
  return units * pow10(digits + kGuardDigits / 2) < (BigInt(1) << bits);
}

// Cohen-Villegas-Zagier acceleration of sum (-1)^k u_k, exact rationals.
Rational cvz(const std::vector<Rational>& u, int n) {
  BigInt d0 = 1, d1 = 3;
  for (int i = 1; i < n; ++i) {
    BigInt d2 = 6 * d1 - d0;
    d0 = d1;
    d1 = d2;
  }
  BigInt d = n == 0 ? d0 : d1;
  Rational bb(-1), c(BigInt(-d)), s(0);
  for (int k = 0; k < n; ++k) {
    c = bb - c;
    s += c * u[k];
    Rational kk(k);
    bb = bb * (kk + Rational(n)) * (kk - Rational(n)) / ((kk + Rational(1, 2)) * (kk + Rational(1)));
  }
  return s / Rational(d);
}

BigApprox eval_boundary(const CoeffFamily& f, const Rational& a, const Rational& b, const Rational& z, long digits) {
  HyperParams hp = *f.hyper_params();
  Rational excess(0);
  for (const auto& u : hp.upper) excess += u;
  for (const auto& l : hp.lower) excess -= l;
  // weighted terms behave like n^(excess) (b != 0) or n^(excess - 1)
  Rational decay = b.is_zero() ? excess - Rational(1) : excess;
  if (decay >= Rational(0)) throw DivergentInput("boundary series does not converge: " + f.str());
  long bits = working_bits(digits);
  int n1 = static_cast<int>(std::ceil((digits + kGuardDigits) * 1.31)) + 8;
  int n2 = n1 + 12;
  // u_k = |(a + b k) t_k z^k|, signs alternate since z rho = -1
  std::vector<Rational> u(n2);
  Rational t(1), zabs = z.abs();
  Rational umax(0);
  for (int k = 0; k < n2; ++k) {
    u[k] = lin(a, b, static_cast<unsigned long>(k)) * t;
    if (u[k].abs() > umax) umax = u[k].abs();
    t *= hp.term_ratio(static_cast<unsigned long>(k)) * zabs;
  }
  Rational s1 = cvz(u, n1), s2 = cvz(u, n2);
  BigInt d0 = 1, d1 = 3;
  for (int i = 1; i < n2; ++i) {
    BigInt dn = 6 * d1 - d0;
    d0 = d1;
    d1 = dn;
  }
  Rational err = (s1 - s2).abs() + Rational(2) * umax / Rational(d1);
  BigApprox v = BigApprox::from_rational(s2, bits);
  v = v.widen(units_of(err, bits));
  if (!v.err_below_pow10(digits)) throw NoConvergenceDetected("boundary acceleration did not reach requested digits");
  return v;
}

BigApprox sum_stream(const CoeffFamily& f, const Rational& a, const Rational& b, const Rational& z, long digits) {
  long bits = working_bits(digits);
  Rational L = (z * f.rho()).abs();
  Rational q = (Rational(1) + L) / Rational(2);
  Rational tail_factor = q / (Rational(1) - q);
  double per = std::log(1.0 / L.to_double());
  int n_max = static_cast<int>((digits + kGuardDigits) * 2.303 / per) + 40;
  for (;;) {
    auto t = coeff_stream(f, n_max);
    BigApprox sum(0, 0, bits);
    Rational zp(1);
    Rational prev_mag(-1);
    for (int n = 0; n <= n_max; ++n) {
      Rational w = t[n] * zp;
      sum = sum + BigApprox::from_rational(w * lin(a, b, static_cast<unsigned long>(n)), bits);
      Rational mag = w.abs() * magnitude_weight(a, b, static_cast<unsigned long>(n));
      if (n >= 8 && !prev_mag.is_zero() && prev_mag > Rational(0) && mag <= prev_mag * q) {
        BigInt tail = units_of(mag * tail_factor, bits);
        if (tail_small(tail, bits, digits)) return sum.widen(tail);
      }
      prev_mag = mag;
      zp *= z;
    }
    n_max *= 2;
    if (n_max > 200000) throw NoConvergenceDetected("coefficient stream summation did not settle");
  }
}

}  // namespace

BigApprox sum_hypergeometric(const HyperParams& p, const Rational& z, const Rational& a, const Rational& b,
                             long digits) {
  long bits = working_bits(digits);
  long w = bits + 32;
  Rational L;
  if (p.upper.size() > p.lower.size() + 1 && !z.is_zero()) throw DivergentInput("pFq with p > q+1 diverges");
  L = p.upper.size() == p.lower.size() + 1 ? z.abs() : Rational(0);
  if (L >= Rational(1)) throw DivergentInput("hypergeometric series outside its disc of convergence at z = " + z.str());
  Rational q = (Rational(1) + L) / Rational(2);
  Rational tail_factor = q / (Rational(1) - q);
  BigApprox T = BigApprox::from_int(1, w);
  BigApprox sum(0, 0, w);
  for (unsigned long n = 0;; ++n) {
    sum = sum + T.mul_rational(lin(a, b, n));
    Rational r = p.term_ratio(n) * z;
    if (r.is_zero()) return sum.with_bits(bits);  // terminating
    Rational mag_ratio = r.abs() * magnitude_weight(a, b, n + 1) / magnitude_weight(a, b, n);
    if (n >= 8 && mag_ratio <= q) {
      // |T_n| (|a| + |b|(n+1)) bounds the current term magnitude
      BigInt tail = units_of(T, magnitude_weight(a, b, n) * tail_factor);
      if (tail_small(tail, w, digits)) return sum.widen(tail).with_bits(bits);
    }
    T = T.mul_rational(r);
    if (n > 50'000'000UL) throw NoConvergenceDetected("hypergeometric summation did not settle");
  }
}

BigApprox eval_numeric(const CoeffFamily& f, const Rational& a, const Rational& b, const Rational& z, long digits) {
  switch (classify(f, z)) {
    case Convergence::Outside:
      throw DivergentInput(f.str() + " diverges at z = " + z.str() + " (|z| rho >= 1)");
    case Convergence::AlternatingBoundary:
      return eval_boundary(f, a, b, z, digits);
    case Convergence::Inside:
      break;
  }
  if (auto hp = f.hyper_params()) return sum_hypergeometric(*hp, z, a, b, digits);
  return sum_stream(f, a, b, z, digits);
}

CheckResult clausen_check(const Rational& a, const Rational& b, int order, std::optional<Rational> lower2_override) {
  Rational c = a + b + Rational(1, 2);
  Series f = hyper_series(HyperParams{{a, b}, {c}}, order);
  Series lhs = fps_mul(f, f);
  Rational l2 = lower2_override ? *lower2_override : Rational(2) * (a + b);
  Series rhs = hyper_series(HyperParams{{Rational(2) * a, Rational(2) * b, a + b}, {c, l2}}, order);
  int mm = first_mismatch(lhs, rhs);
  return {mm < 0, mm};
}

GaussHalfReport gauss_half_check(const Rational& s, long digits) {
  GaussHalfReport rep;
  Rational half(1, 2);
  BigApprox f1 = sum_hypergeometric(HyperParams{{s, Rational(1) - s}, {Rational(1)}}, half, 1, 0, digits);
  BigApprox f2 = sum_hypergeometric(HyperParams{{s + Rational(1), Rational(2) - s}, {Rational(2)}}, half, 1, 0, digits);
  rep.lhs = (f1 * f2).mul_rational(s * (Rational(1) - s));
  SinPi sp = sin_pi(s, digits);
  rep.exact_sine = sp.exact;
  long bits = working_bits(digits);
  rep.rhs = (sp.approx.with_bits(bits) * inv_pi_bits(bits)).mul_int(2);
  rep.pass = agree(rep.lhs, rep.rhs, digits);
  return rep;
}

}  // namespace rpv
