#pragma once

#include <stdexcept>
#include <string>

namespace rpv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define RPV_ERROR(Name)                                   \
  struct Name : Error {                                   \
    explicit Name(const std::string& what) : Error(what) {} \
  }

RPV_ERROR(ParseError);
RPV_ERROR(IncompatibleRadicals);
RPV_ERROR(DivergentInput);
RPV_ERROR(NonzeroConstantTerm);
RPV_ERROR(NonUnitConstantTerm);
RPV_ERROR(DenominatorVanishesAtZero);
RPV_ERROR(UnrepresentableConstant);
RPV_ERROR(SingularPoint);
RPV_ERROR(ArgumentMismatch);
RPV_ERROR(BranchRefused);
RPV_ERROR(InvariantViolation);
RPV_ERROR(NoConvergenceDetected);
RPV_ERROR(UnsupportedFamily);
RPV_ERROR(NonExactConstant);
RPV_ERROR(UnknownId);

#undef RPV_ERROR

}  // namespace rpv
