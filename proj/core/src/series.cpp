#include "rpv/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "rpv/errors.hpp"

namespace rpv {

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("Series: need at least one coefficient");
}

Series Series::one(int order) {
  Series s = zero(order);
  s.c_[0] = 1;
  return s;
}

Series Series::x(int order) {
  Series s = zero(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

Series Series::from_poly(const Poly& p, int order) {
  std::vector<Rational> c(order + 1);
  for (int i = 0; i <= order; ++i) c[i] = p.at(i);
  return Series(std::move(c));
}

Series Series::truncate(int order) const {
  if (order > this->order()) throw std::invalid_argument("Series: cannot extend truncation order");
  return Series(std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

Series fps_add(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return Series(std::move(c));
}

Series fps_sub(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = a[i] - b[i];
  return Series(std::move(c));
}

Series fps_mul(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  std::vector<mpq_class> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] += a[i].raw() * b[j].raw();
    }
  }
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (auto& v : c) out.emplace_back(v);
  return Series(std::move(out));
}

Series fps_scale(const Series& a, const Rational& s) {
  std::vector<Rational> c = a.coeffs();
  for (auto& v : c) v *= s;
  return Series(std::move(c));
}

Series fps_compose(const Series& outer, const Series& inner) {
  if (!inner[0].is_zero()) throw NonzeroConstantTerm("fps_compose: inner series has nonzero constant term");
  int n = std::min(outer.order(), inner.order());
  // Horner: outer_N, then r = r * inner + outer_k.
  Series r = Series::zero(n);
  for (int k = outer.order(); k >= 0; --k) {
    r = fps_mul(r, inner);
    std::vector<Rational> c = r.coeffs();
    c[0] += outer[k];
    r = Series(std::move(c));
  }
  return r;
}

Series fps_pow_rational(const Series& base, const Rational& e) {
  if (base[0] != Rational(1)) throw NonUnitConstantTerm("fps_pow_rational: constant term must be 1");
  int n = base.order();
  // From B P' = e B' P:  k p_k = sum_{j=1}^{k} (e j - (k - j)) b_j p_{k-j}
  std::vector<mpq_class> p(n + 1);
  p[0] = 1;
  const mpq_class& ee = e.raw();
  for (int k = 1; k <= n; ++k) {
    mpq_class acc = 0;
    for (int j = 1; j <= k; ++j) {
      if (base[j].is_zero()) continue;
      acc += (ee * j - (k - j)) * base[j].raw() * p[k - j];
    }
    p[k] = acc / k;
  }
  std::vector<Rational> out;
  for (auto& v : p) out.emplace_back(v);
  return Series(std::move(out));
}

Series fps_inverse(const Series& a) {
  if (a[0].is_zero()) throw DenominatorVanishesAtZero("fps_inverse: constant term is zero");
  int n = a.order();
  std::vector<mpq_class> r(n + 1);
  mpq_class inv0 = 1 / a[0].raw();
  r[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    mpq_class acc = 0;
    for (int j = 1; j <= k; ++j)
      if (!a[j].is_zero()) acc += a[j].raw() * r[k - j];
    r[k] = -acc * inv0;
  }
  std::vector<Rational> out;
  for (auto& v : r) out.emplace_back(v);
  return Series(std::move(out));
}

Series fps_theta(const Series& a) {
  std::vector<Rational> c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= Rational(static_cast<long>(i));
  return Series(std::move(c));
}

Series fps_expand_ratfun(const Poly& num, const Poly& den, int order) {
  if (den.at(0).is_zero()) throw DenominatorVanishesAtZero("fps_expand_ratfun: den(0) = 0");
  return fps_mul(Series::from_poly(num, order), fps_inverse(Series::from_poly(den, order)));
}

int first_mismatch(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  for (int i = 0; i <= n; ++i)
    if (a[i] != b[i]) return i;
  return -1;
}

}  // namespace rpv
