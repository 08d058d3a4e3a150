#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpv/bigapprox.hpp"
#include "rpv/hyper.hpp"
#include "rpv/poly.hpp"
#include "rpv/radconst.hpp"

namespace rpv {

struct StartReport {
  bool pass = false;
  bool exact = false;          // 2 sin(s pi) is in Q(sqrt m)
  std::optional<RadConst> c;   // 2 sin(s pi) when exact
  BigApprox lhs, rhs;
};

// sum n c_n (1/2)^n with c_n the Cauchy square of F(s,1-s;1), against 2 sin(s pi)/pi.
StartReport starting_formula(const Rational& s, long digits);

struct BinomialCheck {
  bool pass = false;
  int first_fail = -1;
};

// 1/base^n sum_k f(k) f(n-k) against c_n/2^n, with f(k) the central binomial
// product for s (base 32, 54, 128, 864 for s = 1/2, 1/3, 1/4, 1/6).
// base = 0 picks the natural base.
BinomialCheck corollary_binomial_check(const Rational& s, int n_max, long base = 0);

enum class Side { Left, Right };

// w(x) sum n t_n A(x)^n as x -> x* from one side equals target/pi.
struct LimitSpec {
  std::string id;
  CoeffFamily family;
  RatFun weight;
  RatFun argument;
  Rational x_star;
  Side side = Side::Left;
  RadConst target;
  Rational step_scale{1};  // multiplies delta0; wide for flat approaches
};

const std::vector<LimitSpec>& limit_catalog();
const LimitSpec& find_limit(std::string_view id);

struct LimitReport {
  long double value = 0;
  long double target = 0;
  long double error = 0;
  int levels = 0;
  bool pass = false;
  std::vector<long double> ladder;  // extrapolated value after each level
};

struct LimitOptions {
  Rational delta0{1, 16};
  int k_max = 40;
  int order = 4;
  unsigned long term_budget = 400'000'000UL;  // per ladder point
  int jobs = 1;                                // ladder points evaluated concurrently
};

// Throws NoConvergenceDetected when the extrapolants do not settle.
LimitReport limit_eval(const LimitSpec& spec, long double tolerance, const LimitOptions& opts = {});

struct S2Row {
  unsigned long n = 0;
  BigInt convolution;
  Rational form_3f2;  // 4^n C(2n,n)^2 3F2(1/2,1/2,-n;1,1/2-n;1)
  Rational form_4f3;  // C(2n,n) C(4n,2n) 4F3(1/4,3/4,-n,-n;1,1/4-n,3/4-n;1)
  BigInt printed;     // C(2n,n) sum_k C(2k,k) C(2n-2k,n-k) 4^(n-k)
};

struct S2Report {
  bool pass = false;              // convolution = both terminating forms for all n
  int first_fail = -1;
  int printed_first_mismatch = -1;  // first n where the printed definition disagrees
};

S2Row sun_s2_row(unsigned long n);
S2Report sun_S2_identity(int n_max);

struct SunReport {
  bool numeric = false;
  bool transport = false;
  bool pass() const { return numeric && transport; }
  BigApprox value, target;
  std::string detail;
};

// sum (4k+1)/(-192)^k C(2k,k) S_k(4) = sqrt(3)/pi
SunReport sun_2_11(long digits);
// sum (a + b n)/2^n (Cauchy product of F(1/3,1/6;1) and F(2/3,5/6;1)) = 3 sqrt(6)/(2 pi)
SunReport sun_4_14(long digits, const Rational& a = -1, const Rational& b = 3);
// (16n+3)(1/100)^n with Domb numbers = 25/(sqrt(3) pi); formal check of the rule too.
SunReport rogers_domb_check(long digits, int order = 40);

// Roots of 64x/(64x-1) = z for z in {-1, -1/8, 1/64, 4, -8, 64}, in that order.
std::vector<Rational> sun_arguments();

}  // namespace rpv
