#include "rpv/rational.hpp"

#include <cctype>
#include <cmath>

#include "rpv/errors.hpp"

namespace rpv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(const BigInt& p, const BigInt& q) {
  if (q == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(p, q);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view ps = s.substr(0, slash);
  std::string_view qs = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(ps) || !all_digits(qs))
    throw ParseError("not a rational literal (expected p or p/q): '" + std::string(text) + "'");
  BigInt p{std::string(ps)}, q{std::string(qs)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (neg) p = -p;
  return Rational(p, q);
}

Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(den(), num());
}

Rational Rational::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  mpz_class p, q;
  mpz_pow_ui(p.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(q.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(p, q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

long double Rational::to_long_double() const {
  // Scale into range of long double with 80 bits of quotient.
  BigInt p = ::abs(num()), q = den();
  long shift = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) -
               static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2)) + 80;
  BigInt quo;
  if (shift >= 0) {
    quo = (p << shift) / q;
  } else {
    quo = p / (q << -shift);
  }
  long double m = 0;
  // quo has ~80 bits; take top 64 bits.
  size_t bits = mpz_sizeinbase(quo.get_mpz_t(), 2);
  long drop = bits > 64 ? static_cast<long>(bits - 64) : 0;
  BigInt top = quo >> drop;
  m = static_cast<long double>(top.get_ui());
  long double r = std::ldexp(m, static_cast<int>(drop - shift));
  return sign() < 0 ? -r : r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational gbinomial(const Rational& x, unsigned long k) {
  Rational r(1);
  for (unsigned long j = 0; j < k; ++j) r *= (x - Rational(static_cast<long>(j))) / Rational(static_cast<long>(j + 1));
  return r;
}

}  // namespace rpv
