#include "rpv/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rpv/errors.hpp"

namespace rpv {

Poly::Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

Poly::Poly(std::initializer_list<long> c) {
  for (long v : c) c_.emplace_back(v);
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("polynomial must be written [c0, c1, ...]: '" + std::string(text) + "'");
  std::vector<Rational> c;
  std::string body = s.substr(1, s.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.push_back(Rational::parse(tok));
  }
  return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Poly(std::move(d));
}

Poly Poly::pow(unsigned e) const {
  Poly r{1};
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Poly Poly::compose(const Poly& inner) const {
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + Poly(std::vector<Rational>{*it});
  return r;
}

std::string Poly::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].str();
  if (c_.empty()) os << "0";
  os << "]";
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.at(i) + b.at(i);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& a) {
  std::vector<Rational> c = a.c_;
  for (auto& v : c) v *= s;
  return Poly(std::move(c));
}

Rational RatFun::eval(const Rational& x) const {
  Rational d = den.eval(x);
  if (d.is_zero()) throw SingularPoint("denominator vanishes at x = " + x.str());
  return num.eval(x) / d;
}

Rational RatFun::deriv(const Rational& x) const {
  Rational d = den.eval(x);
  if (d.is_zero()) throw SingularPoint("denominator vanishes at x = " + x.str());
  return (num.derivative().eval(x) * d - num.eval(x) * den.derivative().eval(x)) / (d * d);
}

std::string RatFun::str() const { return num.str() + "/" + den.str(); }

namespace {

std::vector<BigInt> divisors(BigInt n) {
  n = ::abs(n);
  std::vector<BigInt> out;
  if (n == 0) return out;
  // n here comes from small rule polynomials; plain enumeration suffices.
  std::vector<std::pair<BigInt, int>> f;
  BigInt rest = n;
  for (BigInt p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (rest > 1) f.emplace_back(rest, 1);
  out.push_back(1);
  for (auto& [p, e] : f) {
    std::size_t sz = out.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p0) {
  std::vector<Rational> roots;
  if (p0.degree() < 1) return roots;
  // clear denominators
  BigInt l = 1;
  for (const auto& c : p0.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<BigInt> c;
  for (const auto& v : p0.coeffs()) c.push_back((v * Rational(l)).num());
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<BigInt> cc(c.begin() + static_cast<long>(low), c.end());
  if (cc.size() < 2) return roots;
  auto ps = divisors(cc.front()), qs = divisors(cc.back());
  std::set<std::pair<BigInt, BigInt>> seen;
  Poly q(std::vector<Rational>(cc.begin(), cc.end()));
  for (const auto& a : ps)
    for (const auto& b : qs)
      for (int sgn : {1, -1}) {
        Rational r(BigInt(sgn * a), b);
        if (seen.count({r.num(), r.den()})) continue;
        seen.insert({r.num(), r.den()});
        if (q.eval(r).is_zero()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace rpv
