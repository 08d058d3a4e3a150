#include "rpv/radconst.hpp"

#include <sstream>

#include "rpv/errors.hpp"

namespace rpv {

std::pair<BigInt, BigInt> squarefree_split(const BigInt& n) {
  if (n <= 0) throw std::domain_error("squarefree_split: n must be positive");
  BigInt rest = n, s = 1, f = 1;
  // Trial division up to cbrt(rest); what remains has at most two prime
  // factors, so it is either a perfect square or squarefree.
  for (unsigned long p = 2;; p += (p == 2 ? 1 : 2)) {
    BigInt pp = p;
    if (pp * pp * pp > rest) break;
    if (p > 20'000'000UL) throw UnrepresentableConstant("radicand too large to factor: " + n.get_str());
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= p;
        ++e;
      }
      for (int j = 0; j < e / 2; ++j) s *= p;
      if (e % 2) f *= p;
    }
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      BigInt r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      s *= r;
    } else {
      f *= rest;
    }
  }
  return {s, f};
}

RadConst::RadConst(const Rational& r, const BigInt& m, int t) : r_(r), m_(m), t_(t & 1) {
  if (m_ <= 0) throw std::domain_error("RadConst: radicand must be positive");
  if (m_ != 1) {
    auto [s, f] = squarefree_split(m_);
    r_ *= Rational(s);
    m_ = f;
  }
  if (r_.is_zero()) {
    m_ = 1;
    t_ = 0;
  }
}

RadConst RadConst::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("not a radical constant (expected r*sqrt(m)[*i]): '" + s + "'"); };
  std::string_view rest = text;
  int t = 0;
  if (rest.size() >= 2 && rest.substr(rest.size() - 2) == "*i") {
    t = 1;
    rest.remove_suffix(2);
  } else if (rest == "i") {
    return RadConst(Rational(1), 1, 1);
  } else if (rest == "-i") {
    return RadConst(Rational(-1), 1, 1);
  }
  BigInt m = 1;
  auto sq = rest.find("sqrt(");
  std::string_view rpart = rest;
  if (sq != std::string_view::npos) {
    if (rest.back() != ')') throw bad();
    std::string_view inner = rest.substr(sq + 5, rest.size() - sq - 6);
    Rational mm = Rational::parse(inner);
    if (!mm.is_integer() || mm.sign() <= 0) throw bad();
    m = mm.num();
    rpart = rest.substr(0, sq);
    if (rpart.empty()) {
      rpart = "1";
    } else if (rpart == "-") {
      rpart = "-1";
    } else {
      if (rpart.back() != '*') throw bad();
      rpart.remove_suffix(1);
    }
  }
  Rational r;
  try {
    r = Rational::parse(rpart);
  } catch (const ParseError&) {
    throw bad();
  }
  return RadConst(r, m, t);
}

RadConst RadConst::inv() const {
  if (is_zero()) throw std::domain_error("RadConst: inverse of zero");
  // 1/(r sqrt(m) i^t) = sqrt(m)/(r m) * i^-t, i^-1 = -i.
  Rational nr = (r_ * Rational(m_)).inv();
  if (t_) nr = -nr;
  return RadConst(nr, m_, t_);
}

std::string RadConst::str() const {
  std::ostringstream os;
  os << r_.str();
  if (m_ != 1) os << "*sqrt(" << m_.get_str() << ")";
  if (t_) os << "*i";
  return os.str();
}

RadConst rad_mul(const RadConst& x, const RadConst& y) {
  if (x.is_zero() || y.is_zero()) return RadConst();
  BigInt g;
  mpz_gcd(g.get_mpz_t(), x.m().get_mpz_t(), y.m().get_mpz_t());
  // sqrt(m1) sqrt(m2) = g sqrt(m1 m2 / g^2); both radicands squarefree.
  BigInt m = (x.m() / g) * (y.m() / g);
  Rational r = x.r() * y.r() * Rational(g);
  int t = x.t() + y.t();
  if (t == 2) {
    r = -r;
    t = 0;
  }
  return RadConst(r, m, t);
}

RadConst rad_add(const RadConst& x, const RadConst& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (!x.same_radical(y))
    throw IncompatibleRadicals("cannot add " + x.str() + " and " + y.str());
  return RadConst(x.r() + y.r(), x.m(), x.t());
}

RadConst rad_sub(const RadConst& x, const RadConst& y) { return rad_add(x, -y); }

RadConst rad_div(const RadConst& x, const RadConst& y) { return rad_mul(x, y.inv()); }

RadConst rational_pow_half(const Rational& q, long k) {
  if (q.is_zero()) {
    if (k <= 0) throw std::domain_error("rational_pow_half: zero to nonpositive power");
    return RadConst();
  }
  Rational a = q.abs();
  long whole = (k >= 0 ? k : k - 1) / 2;  // floor(k/2)
  long half = k - 2 * whole;               // 0 or 1
  RadConst res(a.pow(whole));
  if (half) {
    // sqrt(p/r) = sqrt(p r)/r
    res = rad_mul(res, RadConst(Rational(1) / Rational(a.den()), a.num() * a.den(), 0));
  }
  if (q.sign() < 0) {
    // i^k with k taken mod 4
    long km = ((k % 4) + 4) % 4;
    if (km == 1) res = rad_mul(res, RadConst(Rational(1), 1, 1));
    if (km == 2) res = -res;
    if (km == 3) res = rad_mul(res, RadConst(Rational(-1), 1, 1));
  }
  return res;
}

}  // namespace rpv
