#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rpv/bigapprox.hpp"
#include "rpv/rational.hpp"
#include "rpv/series.hpp"

namespace rpv {

Rational pochhammer(const Rational& a, unsigned long n);

// Upper/lower parameters of a pFq series; the n! divisor is implicit.
struct HyperParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;

  // t_{n+1}/t_n without z.
  Rational term_ratio(unsigned long n) const;
  Rational term(unsigned long n) const;
};

Series hyper_series(const HyperParams& p, int order);

enum class FamilyKind { Hyper3F2, Square2F1, ConvCentral, Domb, Hyper2F1, Product2F1, SunS2 };

// Coefficient stream t_n of a series sum t_n x^n.
struct CoeffFamily {
  FamilyKind kind = FamilyKind::Hyper3F2;
  std::vector<Rational> params;

  static CoeffFamily hyper3F2(const Rational& s) { return {FamilyKind::Hyper3F2, {s}}; }
  static CoeffFamily square2F1(const Rational& s) { return {FamilyKind::Square2F1, {s}}; }
  static CoeffFamily convCentral(const Rational& s) { return {FamilyKind::ConvCentral, {s}}; }
  static CoeffFamily domb() { return {FamilyKind::Domb, {}}; }
  static CoeffFamily hyper2F1(const Rational& a, const Rational& b, const Rational& c) {
    return {FamilyKind::Hyper2F1, {a, b, c}};
  }
  static CoeffFamily product2F1(const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2) {
    return {FamilyKind::Product2F1, {a1, b1, a2, b2}};
  }
  static CoeffFamily sunS2() { return {FamilyKind::SunS2, {}}; }

  // "hyper3F2(1/2)", "square2F1(1/4)", "convCentral(1/6)", "domb",
  // "hyper2F1(a,b;c)", "product2F1(a1,b1;a2,b2)", "sunS2"
  static CoeffFamily parse(std::string_view text);
  std::string str() const;

  // s for the one-parameter kinds
  std::optional<Rational> s() const;
  // limit of t_{n+1}/t_n
  Rational rho() const;
  // t_{n+1}/t_n is a fixed rational function of n
  bool hypergeometric() const;
  std::optional<HyperParams> hyper_params() const;

  friend bool operator==(const CoeffFamily& a, const CoeffFamily& b) {
    return a.kind == b.kind && a.params == b.params;
  }
};

std::vector<Rational> coeff_stream(const CoeffFamily& f, int n_max);
Rational coeff(const CoeffFamily& f, unsigned long n);
Series family_series(const CoeffFamily& f, int order);

// Direct double-sum definitions, kept separate from the stream builders.
Rational conv_central_direct(const Rational& s, unsigned long n);
BigInt domb_direct(unsigned long n);
BigInt sun_s2_direct(unsigned long n);

enum class Convergence { Inside, AlternatingBoundary, Outside };
Convergence classify(const CoeffFamily& f, const Rational& z);

// sum (a + b n) t_n z^n with err < 10^-digits. Throws DivergentInput
// outside the disc; z rho = -1 is summed by alternating-series acceleration
// for hypergeometric kinds.
BigApprox eval_numeric(const CoeffFamily& f, const Rational& a, const Rational& b, const Rational& z, long digits);

// Same sum for a plain pFq series.
BigApprox sum_hypergeometric(const HyperParams& p, const Rational& z, const Rational& a, const Rational& b,
                             long digits);

struct CheckResult {
  bool pass = false;
  int first_mismatch = -1;
};

// F(a,b;a+b+1/2;x)^2 against 3F2(2a,2b,a+b; a+b+1/2, 2a+2b; x). The second
// lower parameter can be overridden for negative controls.
CheckResult clausen_check(const Rational& a, const Rational& b, int order,
                          std::optional<Rational> lower2_override = std::nullopt);

struct GaussHalfReport {
  bool pass = false;
  bool exact_sine = false;
  BigApprox lhs, rhs;
};

// s(1-s) F(s,1-s;1;1/2) F(s+1,2-s;2;1/2) against 2 sin(s pi)/pi.
GaussHalfReport gauss_half_check(const Rational& s, long digits);

}  // namespace rpv
