#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "rpv/poly.hpp"
#include "rpv/radconst.hpp"
#include "rpv/rational.hpp"
#include "rpv/series.hpp"

namespace rpv::testing {

// Seeded source of random exact values. RPV_SEED overrides the fixed seed.
class Gen {
 public:
  explicit Gen(std::uint64_t salt = 0) : rng_(seed() ^ salt) {}

  static std::uint64_t seed() {
    const char* s = std::getenv("RPV_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 0x5eed2024ULL;
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long max_num = 50, long max_den = 30) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }
  Rational nonzero_rational(long max_num = 50, long max_den = 30) {
    Rational q;
    do q = rational(max_num, max_den);
    while (q.is_zero());
    return q;
  }
  // Strictly inside (0, 1).
  Rational unit_interval(long max_den = 40) {
    long d = integer(2, max_den);
    return Rational(integer(1, d - 1), d);
  }

  // r sqrt(m) i^t with m drawn from the given radicals.
  RadConst radconst(const std::vector<long>& radicals = {1, 2, 3, 5, 6, 7, 10, 15}) {
    long m = radicals[static_cast<std::size_t>(integer(0, static_cast<long>(radicals.size()) - 1))];
    return RadConst(rational(), BigInt(m), static_cast<int>(integer(0, 1)));
  }
  RadConst radconst_in(long m, int t) { return RadConst(rational(), BigInt(m), t); }

  Poly poly(int max_degree, long max_num = 9) {
    std::vector<Rational> c;
    int d = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= d; ++i) c.push_back(rational(max_num, 5));
    return Poly(c);
  }

  Series series(int order, bool zero_constant = false) {
    std::vector<Rational> c;
    for (int i = 0; i <= order; ++i) c.push_back(rational(20, 9));
    if (zero_constant) c[0] = Rational(0);
    return Series(c);
  }
  Series unit_series(int order) {
    Series s = series(order);
    std::vector<Rational> c = s.coeffs();
    c[0] = Rational(1);
    return Series(c);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rpv::testing
