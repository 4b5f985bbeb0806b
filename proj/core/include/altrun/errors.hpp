#pragma once

#include <stdexcept>
#include <string>

namespace altrun {

// Base of every error raised by the library. Each subclass names one failure
// mode so callers (and the CLI's exit-code mapping) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ALTRUN_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

ALTRUN_DEFINE_ERROR(ParseError);
ALTRUN_DEFINE_ERROR(DivisionByZero);
ALTRUN_DEFINE_ERROR(NotDivisible);
ALTRUN_DEFINE_ERROR(ZeroPolynomial);
ALTRUN_DEFINE_ERROR(SupportOutOfRange);
ALTRUN_DEFINE_ERROR(AlphabetMismatch);
ALTRUN_DEFINE_ERROR(DiscriminantMismatch);
ALTRUN_DEFINE_ERROR(UnknownSymbol);
ALTRUN_DEFINE_ERROR(NotOfExpectedShape);
ALTRUN_DEFINE_ERROR(SizeLimit);
ALTRUN_DEFINE_ERROR(StatClassMismatch);
ALTRUN_DEFINE_ERROR(InvalidStirlingWord);
ALTRUN_DEFINE_ERROR(InvalidObject);
ALTRUN_DEFINE_ERROR(UnknownFamily);
ALTRUN_DEFINE_ERROR(NotSymmetric);
ALTRUN_DEFINE_ERROR(DegenerateSample);
ALTRUN_DEFINE_ERROR(NonInvertibleConstantTerm);
ALTRUN_DEFINE_ERROR(BadConstantTerm);
ALTRUN_DEFINE_ERROR(ExtensionResidue);
ALTRUN_DEFINE_ERROR(DomainError);

#undef ALTRUN_DEFINE_ERROR

}  // namespace altrun
