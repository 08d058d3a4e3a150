#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "rpv/rational.hpp"

namespace rpv {

// Exact constant r * sqrt(m) * i^t with m squarefree, t in {0, 1}.
class RadConst {
 public:
  RadConst() : r_(0), m_(1), t_(0) {}
  RadConst(const Rational& r) : RadConst(r, BigInt(1), 0) {}  // NOLINT(google-explicit-constructor)
  RadConst(long r) : RadConst(Rational(r)) {}                  // NOLINT(google-explicit-constructor)
  // m need not be squarefree; square factors are pulled into r.
  RadConst(const Rational& r, const BigInt& m, int t);

  // "r", "r*sqrt(m)", "r*sqrt(m)*i", "r*i"; r is a rational literal.
  static RadConst parse(std::string_view text);

  const Rational& r() const { return r_; }
  const BigInt& m() const { return m_; }
  int t() const { return t_; }
  bool is_zero() const { return r_.is_zero(); }
  bool is_rational() const { return m_ == 1 && t_ == 0; }
  bool same_radical(const RadConst& o) const { return m_ == o.m_ && t_ == o.t_; }

  RadConst operator-() const { return RadConst(-r_, m_, t_); }
  RadConst inv() const;
  RadConst conj() const { return t_ ? -*this : *this; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const RadConst& c) { return os << c.str(); }
  friend bool operator==(const RadConst& a, const RadConst& b) {
    return a.r_ == b.r_ && a.m_ == b.m_ && a.t_ == b.t_;
  }

 private:
  Rational r_;
  BigInt m_;
  int t_;
};

RadConst rad_mul(const RadConst& x, const RadConst& y);
// Throws IncompatibleRadicals when the radical parts differ and neither is zero.
RadConst rad_add(const RadConst& x, const RadConst& y);
RadConst rad_sub(const RadConst& x, const RadConst& y);
RadConst rad_div(const RadConst& x, const RadConst& y);

inline RadConst operator*(const RadConst& x, const RadConst& y) { return rad_mul(x, y); }
inline RadConst operator/(const RadConst& x, const RadConst& y) { return rad_div(x, y); }
inline RadConst operator+(const RadConst& x, const RadConst& y) { return rad_add(x, y); }
inline RadConst operator-(const RadConst& x, const RadConst& y) { return rad_sub(x, y); }

// q^(k/2) on the principal branch: (-|q|)^(k/2) = |q|^(k/2) * i^k.
RadConst rational_pow_half(const Rational& q, long k);

// Splits n > 0 as s^2 * f with f squarefree. Returns {s, f}.
std::pair<BigInt, BigInt> squarefree_split(const BigInt& n);

}  // namespace rpv
