#pragma once

#include <string>

#include "rpv/poly.hpp"
#include "rpv/translate.hpp"

namespace rpv {

// t_{n+1} z^{n+1} / (t_n z^n) = p(n)/q(n) with integer coefficients.
struct TermRatio {
  Poly p;
  Poly q;
};

// hyper3F2 entries only; throws UnsupportedFamily otherwise.
TermRatio term_ratio(const SeriesSpec& e);

struct SplitNode {
  BigInt P, Q, T;
};

// Terms n in [n0, n1) of sum (a + b n) prod_{k<n} p(k)/q(k); a, b integers.
SplitNode split(const TermRatio& r, const BigInt& a, const BigInt& b, unsigned long n0, unsigned long n1,
                int jobs = 1);

// Exact partial sum over n < count, via binary splitting.
Rational split_partial_sum(const SeriesSpec& e, unsigned long count);

// Terms needed for `digits` significant digits.
unsigned long terms_for_digits(const SeriesSpec& e, long digits);

// "3", "3.1", "3.14", ...: `digits` significant digits of pi from the entry.
// Throws UnsupportedFamily, NonExactConstant, DivergentInput.
std::string pi_digits(const SeriesSpec& e, long digits, int jobs = 1);

struct BenchReport {
  std::string digits;
  unsigned long terms = 0;
  double split_seconds = 0;
  double recombine_seconds = 0;
  double total_seconds = 0;
};

BenchReport bench(const SeriesSpec& e, long digits, int jobs = 1);

}  // namespace rpv
