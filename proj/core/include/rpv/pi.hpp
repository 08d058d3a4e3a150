#pragma once

#include <optional>

#include "rpv/bigapprox.hpp"
#include "rpv/radconst.hpp"

namespace rpv {

inline constexpr long kGuardDigits = 20;

// Binary precision used for a request of `digits` decimal digits.
inline long working_bits(long digits) { return BigApprox::bits_for_digits(digits + kGuardDigits); }

// pi by the Gauss-Legendre (Brent-Salamin) AGM; err < 10^-digits.
BigApprox pi_oracle(long digits);
// Same oracle at an explicit binary precision.
BigApprox pi_agm_bits(long bits);
// pi = 16 atan(1/5) - 4 atan(1/239), fixed-point with a rigorous bound.
BigApprox pi_machin_bits(long bits);
BigApprox pi_machin(long digits);

// 1/pi at the given precision, derived from the AGM oracle.
BigApprox inv_pi_bits(long bits);

struct SinPi {
  bool exact = false;
  RadConst value;     // valid when exact
  BigApprox approx;   // always valid
};

// sin(s pi) for 0 < s < 1.
SinPi sin_pi(const Rational& s, long digits);
std::optional<RadConst> sin_pi_exact(const Rational& s);

}  // namespace rpv
