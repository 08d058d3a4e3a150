#pragma once

#include <optional>
#include <string>

#include "rpv/radconst.hpp"
#include "rpv/rational.hpp"

namespace rpv {

// Fixed-point approximation: value = mant * 2^-bits, true value within
// err * 2^-bits. Every operation rounds and widens err so the bound stays
// conservative.
class BigApprox {
 public:
  BigApprox() : mant_(0), err_(0), bits_(64) {}
  BigApprox(BigInt mant, BigInt err, long bits);

  static BigApprox from_rational(const Rational& q, long bits);
  static BigApprox from_int(long v, long bits) { return from_rational(Rational(v), bits); }
  static long bits_for_digits(long digits);

  const BigInt& mant() const { return mant_; }
  const BigInt& err() const { return err_; }
  long bits() const { return bits_; }

  Rational center() const;
  Rational err_bound() const;
  // Smallest d with err_bound < 10^-d (0 if the bound is >= 1).
  long correct_digits() const;
  bool err_below_pow10(long digits) const;

  // Certainly nonzero (sign known).
  bool sign_known() const { return ::abs(mant_) > err_; }
  int sign() const { return sgn(mant_); }

  BigApprox operator-() const { return BigApprox(-mant_, err_, bits_); }
  BigApprox abs() const { return BigApprox(::abs(mant_), err_, bits_); }
  BigApprox with_bits(long bits) const;
  BigApprox widen(const BigInt& extra_units) const { return BigApprox(mant_, err_ + extra_units, bits_); }
  BigApprox sqrt() const;
  BigApprox mul_rational(const Rational& q) const;
  BigApprox mul_int(long v) const;
  BigApprox div_int(long v) const;

  friend BigApprox operator+(const BigApprox& a, const BigApprox& b);
  friend BigApprox operator-(const BigApprox& a, const BigApprox& b);
  friend BigApprox operator*(const BigApprox& a, const BigApprox& b);
  friend BigApprox operator/(const BigApprox& a, const BigApprox& b);

  double to_double() const;
  long double to_long_double() const;
  // Decimal rendering truncated toward zero with `digits` fractional digits.
  std::string to_decimal(long digits) const;
  // Same as to_decimal but only when both ends of the error interval
  // truncate to the same string.
  std::optional<std::string> certified_decimal(long digits) const;

 private:
  BigInt mant_;
  BigInt err_;
  long bits_;
};

// |a - b| plus both error radii is below 10^-digits.
bool agree(const BigApprox& a, const BigApprox& b, long digits);
// |a - b| exceeds both error radii: the values provably differ.
bool provably_differ(const BigApprox& a, const BigApprox& b);

BigApprox embed(const RadConst& c, long bits);  // real part; t must be 0

struct CApprox {
  BigApprox re, im;
};
CApprox embed_complex(const RadConst& c, long bits);
CApprox cmul(const CApprox& a, const CApprox& b);
CApprox cadd(const CApprox& a, const CApprox& b);
CApprox csub(const CApprox& a, const CApprox& b);
CApprox cscale(const CApprox& a, const BigApprox& s);
bool cagree(const CApprox& a, const CApprox& b, long digits);

}  // namespace rpv
