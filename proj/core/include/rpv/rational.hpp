#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace rpv {

using BigInt = mpz_class;

// Exact rational, always canonical (gcd 1, positive denominator).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& p, const BigInt& q);
  Rational(long p, long q) : Rational(BigInt(p), BigInt(q)) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // "p/q" or "p"; decimals and whitespace inside the token are rejected.
  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inv() const;
  Rational pow(long e) const;
  double to_double() const { return v_.get_d(); }
  long double to_long_double() const;

  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

// Generalized binomial C(x, k) = x(x-1)...(x-k+1)/k!.
Rational gbinomial(const Rational& x, unsigned long k);

}  // namespace rpv
