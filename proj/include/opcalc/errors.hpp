#pragma once

#include <stdexcept>
#include <string>

namespace opcalc {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define OPCALC_DEFINE_ERROR(NAME)                                  \
  class NAME : public Error {                                      \
   public:                                                         \
    explicit NAME(const std::string& message) : Error(message) {}  \
    const char* kind() const noexcept override { return #NAME; }   \
  }

OPCALC_DEFINE_ERROR(NotAUnit);
OPCALC_DEFINE_ERROR(DivisionByZeroSeries);
OPCALC_DEFINE_ERROR(ZeroPolynomial);
OPCALC_DEFINE_ERROR(OutOfDomain);
OPCALC_DEFINE_ERROR(IntervalMismatch);
OPCALC_DEFINE_ERROR(InvalidInterval);
OPCALC_DEFINE_ERROR(SingularSystem);
OPCALC_DEFINE_ERROR(NotMaterializable);
OPCALC_DEFINE_ERROR(ZeroLeadingCoefficient);
OPCALC_DEFINE_ERROR(SchemaError);
OPCALC_DEFINE_ERROR(ExpressionError);

#undef OPCALC_DEFINE_ERROR

}  // namespace opcalc
