#pragma once

#include <string>
#include <vector>

#include "rpv/poly.hpp"
#include "rpv/rational.hpp"

namespace rpv {

// Truncated power series sum_{i<=N} c_i x^i with explicit order N.
class Series {
 public:
  explicit Series(std::vector<Rational> coeffs);
  static Series zero(int order) { return Series(std::vector<Rational>(order + 1)); }
  static Series one(int order);
  static Series x(int order);
  static Series from_poly(const Poly& p, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Series truncate(int order) const;

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

// Result order is the minimum of the operand orders.
Series fps_add(const Series& a, const Series& b);
Series fps_sub(const Series& a, const Series& b);
Series fps_mul(const Series& a, const Series& b);
Series fps_scale(const Series& a, const Rational& s);
// outer(inner(x)); inner must have zero constant term. Order = min(orders).
Series fps_compose(const Series& outer, const Series& inner);
// base^e, base constant term must be 1.
Series fps_pow_rational(const Series& base, const Rational& e);
Series fps_inverse(const Series& a);
// x d/dx
Series fps_theta(const Series& a);
Series fps_expand_ratfun(const Poly& num, const Poly& den, int order);

// Index of the first differing coefficient up to the shared order, or -1.
int first_mismatch(const Series& a, const Series& b);

}  // namespace rpv
