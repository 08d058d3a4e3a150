#include "rpv/pi.hpp"

#include <cmath>
#include <stdexcept>

namespace rpv {

namespace {

// atan(1/k) * 2^bits as an integer series; returns value and error units.
BigApprox atan_inv(long k, long bits) {
  BigInt k2 = BigInt(k) * k;
  BigInt power = (BigInt(1) << bits) / k;
  BigInt sum = 0;
  long terms = 0;
  for (long j = 0; power != 0; ++j) {
    BigInt term = power / (2 * j + 1);
    if (j % 2) sum -= term; else sum += term;
    power /= k2;
    ++terms;
  }
  // each term is off by < 2 units from truncations; the alternating tail is
  // below the first omitted term, which is < 1 unit.
  return BigApprox(sum, BigInt(2 * terms + 2), bits);
}

}  // namespace

BigApprox pi_agm_bits(long bits) {
  long w = bits + 32;
  BigApprox one = BigApprox::from_int(1, w);
  BigApprox a = one;
  BigApprox b = BigApprox::from_rational(Rational(1, 2), w).sqrt();
  BigApprox t = BigApprox::from_rational(Rational(1, 4), w);
  long p = 1;
  int n = 0;
  for (;;) {
    BigApprox an = (a + b).div_int(2);
    b = (a * b).sqrt();
    BigApprox d = a - an;
    t = t - (d * d).mul_int(p);
    a = an;
    p *= 2;
    ++n;
    // pi - pi_n <= pi^2 2^(n+4) exp(-pi 2^(n+1)) / agm^2, agm > 0.84
    double log2_trunc = std::log2(9.8696044 * 16.0 / 0.7) + n - 3.14159265 * std::ldexp(1.0, n + 1) * 1.4426950408889634;
    if (log2_trunc < -static_cast<double>(w) - 4) break;
    if (n > 64) throw std::logic_error("pi_agm: iteration did not settle");
  }
  BigApprox s = a + b;
  BigApprox pi = (s * s) / t.mul_int(4);
  return pi.widen(1).with_bits(bits);
}

BigApprox pi_oracle(long digits) {
  if (digits < 1) throw std::invalid_argument("pi_oracle: digits must be >= 1");
  long bits = BigApprox::bits_for_digits(digits + kGuardDigits);
  BigApprox pi = pi_agm_bits(bits);
  while (!pi.err_below_pow10(digits)) {
    bits += 64;
    pi = pi_agm_bits(bits);
  }
  return pi;
}

BigApprox pi_machin_bits(long bits) {
  long w = bits + 16;
  BigApprox a = atan_inv(5, w), b = atan_inv(239, w);
  return (a.mul_int(16) - b.mul_int(4)).with_bits(bits);
}

BigApprox pi_machin(long digits) {
  return pi_machin_bits(BigApprox::bits_for_digits(digits + kGuardDigits));
}

BigApprox inv_pi_bits(long bits) {
  BigApprox pi = pi_agm_bits(bits + 16);
  return (BigApprox::from_int(1, bits + 16) / pi).with_bits(bits);
}

std::optional<RadConst> sin_pi_exact(const Rational& s) {
  if (s == Rational(1, 2)) return RadConst(1);
  if (s == Rational(1, 3) || s == Rational(2, 3)) return RadConst(Rational(1, 2), 3, 0);
  if (s == Rational(1, 4) || s == Rational(3, 4)) return RadConst(Rational(1, 2), 2, 0);
  if (s == Rational(1, 6) || s == Rational(5, 6)) return RadConst(Rational(1, 2));
  return std::nullopt;
}

SinPi sin_pi(const Rational& s, long digits) {
  if (s <= Rational(0) || s >= Rational(1)) throw std::invalid_argument("sin_pi: need 0 < s < 1");
  long bits = BigApprox::bits_for_digits(digits + kGuardDigits);
  SinPi out;
  if (auto e = sin_pi_exact(s)) {
    out.exact = true;
    out.value = *e;
    out.approx = embed(*e, bits);
    return out;
  }
  // sin(s pi) = sin((1-s) pi); reduce to s <= 1/2 for a short series.
  Rational u = s > Rational(1, 2) ? Rational(1) - s : s;
  long w = bits + 32;
  BigApprox x = pi_agm_bits(w).mul_rational(u);
  BigApprox x2 = x * x;
  BigApprox term = x, sum = x;
  for (long k = 1;; ++k) {
    term = (term * x2).div_int((2 * k) * (2 * k + 1));
    if (k % 2) sum = sum - term; else sum = sum + term;
    if (term.mant() == 0 || ::abs(term.mant()) < 4) {
      // alternating with decreasing terms (x < 2): tail below last term
      sum = sum.widen(::abs(term.mant()) + term.err() + 1);
      break;
    }
  }
  out.approx = sum.with_bits(bits);
  return out;
}

}  // namespace rpv
