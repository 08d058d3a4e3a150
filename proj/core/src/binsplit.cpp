#include "rpv/binsplit.hpp"

#include <chrono>
#include <cmath>
#include <future>

#include "rpv/errors.hpp"

namespace rpv {

TermRatio term_ratio(const SeriesSpec& e) {
  if (e.family.kind != FamilyKind::Hyper3F2)
    throw UnsupportedFamily("binary splitting needs a hyper3F2 entry, got " + e.family.str());
  const Rational s = e.family.params[0];
  BigInt sp = s.num(), sq = s.den();
  BigInt u = e.z.num(), v = e.z.den();
  // (n + 1/2)(n + s)(n + 1 - s) z / (n + 1)^3, scaled by 2 sq^2
  Poly p = Poly(std::vector<Rational>{Rational(u)}) * Poly{1, 2} *
           Poly(std::vector<Rational>{Rational(sp), Rational(sq)}) *
           Poly(std::vector<Rational>{Rational(BigInt(sq - sp)), Rational(sq)});
  Poly q = Poly(std::vector<Rational>{Rational(BigInt(2 * sq * sq * v))}) * Poly{1, 1}.pow(3);
  return {p, q};
}

namespace {

BigInt eval_int(const Poly& p, unsigned long n) {
  Rational r = p.eval(Rational(BigInt(n)));
  return r.num();
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Scaled {
  BigInt a, b;
  Rational c_scale;  // c of the integer-weight series is c_scale * c
};

Scaled integer_weights(const SeriesSpec& e) {
  BigInt l = lcm(e.a.den(), e.b.den());
  return {e.a.num() * (l / e.a.den()), e.b.num() * (l / e.b.den()), Rational(l)};
}

}  // namespace

SplitNode split(const TermRatio& r, const BigInt& a, const BigInt& b, unsigned long n0, unsigned long n1, int jobs) {
  if (n1 - n0 == 1) {
    if (n0 == 0) return {1, 1, a};
    BigInt p = eval_int(r.p, n0 - 1);
    return {p, eval_int(r.q, n0 - 1), (a + b * n0) * p};
  }
  unsigned long m = n0 + (n1 - n0) / 2;
  SplitNode L, R;
  if (jobs > 1 && n1 - n0 > 64) {
    auto fut = std::async(std::launch::async, [&] { return split(r, a, b, n0, m, jobs / 2); });
    R = split(r, a, b, m, n1, jobs - jobs / 2);
    L = fut.get();
  } else {
    L = split(r, a, b, n0, m, 1);
    R = split(r, a, b, m, n1, 1);
  }
  return {L.P * R.P, L.Q * R.Q, L.T * R.Q + L.P * R.T};
}

Rational split_partial_sum(const SeriesSpec& e, unsigned long count) {
  if (count == 0) return Rational(0);
  Scaled w = integer_weights(e);
  SplitNode n = split(term_ratio(e), w.a, w.b, 0, count);
  return Rational(n.T, n.Q) / w.c_scale;
}

unsigned long terms_for_digits(const SeriesSpec& e, long digits) {
  double zabs = std::fabs(e.z.to_double());
  if (!(zabs < 1.0) || zabs == 0.0) throw DivergentInput("binary splitting needs 0 < |z| < 1, got z = " + e.z.str());
  return static_cast<unsigned long>(std::ceil(static_cast<double>(digits) * std::log(10.0) / -std::log(zabs))) + 10;
}

namespace {

BenchReport run(const SeriesSpec& e, long digits, int jobs) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  TermRatio ratio = term_ratio(e);
  if (e.c.t() != 0) throw NonExactConstant("constant " + e.c.str() + " is not real");
  BenchReport rep;
  auto t0 = Clock::now();
  long guard = 12;
  for (;;) {
    long work = digits + guard;
    Scaled w = integer_weights(e);
    rep.terms = terms_for_digits(e, work);
    auto ts = Clock::now();
    SplitNode n = split(ratio, w.a, w.b, 0, rep.terms, jobs);
    rep.split_seconds = seconds_since(ts);
    auto tr = Clock::now();
    // pi = c_scale c Q / T with c = r sqrt(m)
    Rational r = e.c.r() * w.c_scale;
    BigInt num = n.Q * r.num(), den = n.T * r.den();
    if (sgn(num) * sgn(den) < 0) throw InvariantViolation("sum and constant have opposite signs");
    num = ::abs(num);
    den = ::abs(den);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(work - 1));
    BigInt rad = e.c.m() * num * num * scale * scale, root;
    mpz_sqrt(root.get_mpz_t(), rad.get_mpz_t());
    // floor(pi 10^(work-1)) lies in [lo, lo + 2]
    BigInt lo = root / den;
    BigInt cut;
    mpz_ui_pow_ui(cut.get_mpz_t(), 10, static_cast<unsigned long>(guard));
    BigInt lo_t = (lo - 2) / cut, hi_t = (lo + 2) / cut;
    rep.recombine_seconds = seconds_since(tr);
    if (lo_t == hi_t) {
      std::string s = lo_t.get_str();
      rep.digits = s.size() > 1 ? s.substr(0, 1) + "." + s.substr(1) : s;
      break;
    }
    guard *= 2;
  }
  rep.total_seconds = seconds_since(t0);
  return rep;
}

}  // namespace

std::string pi_digits(const SeriesSpec& e, long digits, int jobs) { return run(e, digits, jobs).digits; }

BenchReport bench(const SeriesSpec& e, long digits, int jobs) { return run(e, digits, jobs); }

}  // namespace rpv
