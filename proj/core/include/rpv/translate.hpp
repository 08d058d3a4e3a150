#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rpv/hyper.hpp"
#include "rpv/radconst.hpp"
#include "rpv/transforms.hpp"

namespace rpv {

enum class Status { ProvedStart, ProvedTranslation, NumericOnly, DivergentCertificate };

std::string to_string(Status s);
Status parse_status(std::string_view text);

// sum (a + b n) t_n z^n = c / pi
struct SeriesSpec {
  std::string id;
  CoeffFamily family;
  Rational z;
  Rational a;
  Rational b;
  RadConst c;
  Status status = Status::NumericOnly;
  std::string note;

  bool convergent() const { return classify(family, z) != Convergence::Outside; }
};

// (a : b : c) equal up to one rational factor.
bool projectively_equal(const Rational& a1, const Rational& b1, const RadConst& c1, const Rational& a2,
                        const Rational& b2, const RadConst& c2);

struct ThetaCoefficients {
  Rational lambda;  // x0 A'(x0)/A(x0)
  RadConst mu;      // x0 B'(x0)
  RadConst nu;      // x0 B(x0) C'(x0)/C(x0)
  RadConst B;       // B(x0)
};

ThetaCoefficients theta_coefficients(const TransformRule& r, const Rational& x0);

struct Certificate {
  SeriesSpec source;
  std::string rule_id;
  Rational x0;
  ThetaCoefficients theta;
  SeriesSpec derived;
  std::string branch_note;
};

struct TranslateOptions {
  // Skipping the gate is only for demonstrating what it blocks.
  bool enforce_gate = true;
  long gate_digits = 30;
  int formal_order = 64;
};

// Throws ArgumentMismatch, SingularPoint, UnrepresentableConstant and
// BranchRefused when the point checks at x0 fail for a convergent output.
Certificate translate(const SeriesSpec& source, const TransformRule& rule, const Rational& x0,
                      const TranslateOptions& opts = {});

struct RootReport {
  std::vector<Rational> roots;  // distinct, ascending
  int non_rational = 0;         // remaining degree after removing rational roots
};

// Roots of num(C) - z den(C).
RootReport solve_for_x(const RatFun& C, const Rational& z);

// Recomputes the certificate from its source, rule and x0.
bool replay(const Certificate& cert, const std::vector<TransformRule>& rules);

std::string certificate_text(const Certificate& cert);
std::vector<Certificate> parse_certificates(std::string_view text);

}  // namespace rpv
