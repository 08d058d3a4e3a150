#include "rpv/bigapprox.hpp"

#include <cmath>
#include <stdexcept>

namespace rpv {

namespace {

// round(n / 2^s) to nearest
BigInt round_shift(const BigInt& n, long s) {
  if (s <= 0) return n << -s;
  BigInt half = BigInt(1) << (s - 1);
  BigInt r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), BigInt(n + half).get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  return r;
}

BigInt ceil_shift(const BigInt& n, long s) {
  if (s <= 0) return n << -s;
  BigInt r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  return r;
}

BigInt round_div(const BigInt& n, const BigInt& d) {
  BigInt q, nn = 2 * n + d;
  BigInt dd = 2 * d;
  if (d < 0) {
    nn = -nn;
    dd = -dd;
  }
  mpz_fdiv_q(q.get_mpz_t(), nn.get_mpz_t(), dd.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt pow10(long d) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(d));
  return r;
}

void check_bits(const BigApprox& a, const BigApprox& b) {
  if (a.bits() != b.bits()) throw std::logic_error("BigApprox: precision mismatch");
}

}  // namespace

BigApprox::BigApprox(BigInt mant, BigInt err, long bits) : mant_(std::move(mant)), err_(std::move(err)), bits_(bits) {
  if (err_ < 0) throw std::logic_error("BigApprox: negative error bound");
}

long BigApprox::bits_for_digits(long digits) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 8;
}

BigApprox BigApprox::from_rational(const Rational& q, long bits) {
  BigInt n = q.num() << bits;
  BigInt d = q.den();
  BigInt m = round_div(n, d);
  BigInt e = (m * d == n) ? 0 : 1;
  return BigApprox(m, e, bits);
}

Rational BigApprox::center() const { return Rational(mant_, BigInt(1) << bits_); }
Rational BigApprox::err_bound() const { return Rational(err_, BigInt(1) << bits_); }

bool BigApprox::err_below_pow10(long digits) const {
  // err * 10^digits < 2^bits
  return err_ * pow10(digits) < (BigInt(1) << bits_);
}

long BigApprox::correct_digits() const {
  if (err_ == 0) return static_cast<long>(bits_ * 0.30102999566398120);
  long d = static_cast<long>((bits_ - static_cast<long>(mpz_sizeinbase(err_.get_mpz_t(), 2))) * 0.30102999566398120) - 1;
  if (d < 0) d = 0;
  while (err_below_pow10(d + 1)) ++d;
  while (d > 0 && !err_below_pow10(d)) --d;
  return d;
}

BigApprox BigApprox::with_bits(long bits) const {
  if (bits >= bits_) return BigApprox(mant_ << (bits - bits_), err_ << (bits - bits_), bits);
  long s = bits_ - bits;
  return BigApprox(round_shift(mant_, s), ceil_shift(err_, s) + 1, bits);
}

BigApprox operator+(const BigApprox& a, const BigApprox& b) {
  check_bits(a, b);
  return BigApprox(a.mant_ + b.mant_, a.err_ + b.err_, a.bits_);
}

BigApprox operator-(const BigApprox& a, const BigApprox& b) {
  check_bits(a, b);
  return BigApprox(a.mant_ - b.mant_, a.err_ + b.err_, a.bits_);
}

BigApprox operator*(const BigApprox& a, const BigApprox& b) {
  check_bits(a, b);
  BigInt prod = a.mant_ * b.mant_;
  BigInt e = ::abs(a.mant_) * b.err_ + ::abs(b.mant_) * a.err_ + a.err_ * b.err_;
  BigInt m = round_shift(prod, a.bits_);
  BigInt err = ceil_shift(e, a.bits_) + ((m << a.bits_) == prod ? 0 : 1);
  return BigApprox(m, err, a.bits_);
}

BigApprox operator/(const BigApprox& a, const BigApprox& b) {
  check_bits(a, b);
  BigInt bm = ::abs(b.mant_);
  if (bm <= b.err_) throw std::domain_error("BigApprox: divisor interval contains zero");
  BigInt num = a.mant_ << a.bits_;
  BigInt m = round_div(num, b.mant_);
  BigInt e = ceil_div((::abs(a.mant_) * b.err_ + bm * a.err_) << a.bits_, bm * (bm - b.err_));
  return BigApprox(m, e + 1, a.bits_);
}

BigApprox BigApprox::sqrt() const {
  if (mant_ - err_ <= 0) throw std::domain_error("BigApprox: sqrt of interval touching zero");
  BigInt s;
  BigInt scaled = mant_ << bits_;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  BigInt e = 2;
  if (err_ > 0) {
    BigInt q = (BigInt(1) << bits_) / (mant_ - err_), r;
    mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
    e += err_ * (r + 1);
  }
  return BigApprox(s, e, bits_);
}

BigApprox BigApprox::mul_rational(const Rational& q) const {
  BigInt n = mant_ * q.num();
  BigInt m = round_div(n, q.den());
  BigInt e = ceil_div(err_ * ::abs(q.num()), q.den()) + ((m * q.den() == n) ? 0 : 1);
  return BigApprox(m, e, bits_);
}

BigApprox BigApprox::mul_int(long v) const { return BigApprox(mant_ * v, err_ * std::labs(v), bits_); }

BigApprox BigApprox::div_int(long v) const { return mul_rational(Rational(1, v)); }

double BigApprox::to_double() const { return static_cast<double>(to_long_double()); }

long double BigApprox::to_long_double() const { return center().to_long_double(); }

std::string BigApprox::to_decimal(long digits) const {
  BigInt a = ::abs(mant_) * pow10(digits);
  BigInt q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(bits_));
  std::string s = q.get_str();
  if (static_cast<long>(s.size()) <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return (mant_ < 0 ? "-" : "") + out;
}

std::optional<std::string> BigApprox::certified_decimal(long digits) const {
  if (mant_ - err_ < 0 && mant_ + err_ > 0) return std::nullopt;
  BigApprox lo(mant_ - err_, 0, bits_), hi(mant_ + err_, 0, bits_);
  std::string a = lo.to_decimal(digits), b = hi.to_decimal(digits);
  if (a != b) return std::nullopt;
  return a;
}

bool agree(const BigApprox& a, const BigApprox& b, long digits) {
  check_bits(a, b);
  BigInt d = ::abs(a.mant() - b.mant()) + a.err() + b.err();
  return d * pow10(digits) < (BigInt(1) << a.bits());
}

bool provably_differ(const BigApprox& a, const BigApprox& b) {
  check_bits(a, b);
  return ::abs(a.mant() - b.mant()) > a.err() + b.err();
}

BigApprox embed(const RadConst& c, long bits) {
  if (c.t() != 0) throw std::domain_error("embed: imaginary constant has no real embedding");
  BigApprox r = BigApprox::from_rational(c.r(), bits + 8);
  if (c.m() != 1) r = r * BigApprox::from_rational(Rational(c.m()), bits + 8).sqrt();
  return r.with_bits(bits);
}

CApprox embed_complex(const RadConst& c, long bits) {
  BigApprox zero(0, 0, bits);
  if (c.t() == 0) return {embed(c, bits), zero};
  return {zero, embed(RadConst(c.r(), c.m(), 0), bits)};
}

CApprox cmul(const CApprox& a, const CApprox& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CApprox cadd(const CApprox& a, const CApprox& b) { return {a.re + b.re, a.im + b.im}; }
CApprox csub(const CApprox& a, const CApprox& b) { return {a.re - b.re, a.im - b.im}; }
CApprox cscale(const CApprox& a, const BigApprox& s) { return {a.re * s, a.im * s}; }
bool cagree(const CApprox& a, const CApprox& b, long digits) {
  return agree(a.re, b.re, digits) && agree(a.im, b.im, digits);
}

}  // namespace rpv
