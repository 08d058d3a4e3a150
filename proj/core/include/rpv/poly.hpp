#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rpv/rational.hpp"

namespace rpv {

// Dense polynomial, coefficient of x^i at index i. Trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  Poly(std::vector<Rational> c);  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<long> c);

  // "[c0, c1, ...]"
  static Poly parse(std::string_view text);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational at(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational eval(const Rational& x) const;
  Poly derivative() const;
  Poly pow(unsigned e) const;
  Poly compose(const Poly& inner) const;

  std::string str() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

// num/den with den(0) != 0 in every use here.
struct RatFun {
  Poly num;
  Poly den{1};

  Rational eval(const Rational& x) const;
  // d/dx at x
  Rational deriv(const Rational& x) const;
  std::string str() const;
};

// Rational roots of p (with multiplicity collapsed), ascending.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace rpv
