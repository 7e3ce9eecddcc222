#pragma once

#include <stdexcept>
#include <string>

namespace ecgl {

// Base of every error raised by the library. Callers that only need to
// distinguish "bad input" from "bug" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ECGL_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& what) : Error(what) {}   \
    }

ECGL_DEFINE_ERROR(InvalidPrime);
ECGL_DEFINE_ERROR(ModulusMismatch);
ECGL_DEFINE_ERROR(ZeroInverse);
ECGL_DEFINE_ERROR(NotASquare);
ECGL_DEFINE_ERROR(SingularCurve);
ECGL_DEFINE_ERROR(NotOnCurve);
ECGL_DEFINE_ERROR(CurveMismatch);
ECGL_DEFINE_ERROR(TooLarge);
ECGL_DEFINE_ERROR(ExponentOverflow);
ECGL_DEFINE_ERROR(DivisionByZeroPolynomial);
ECGL_DEFINE_ERROR(DegenerateSlope);
ECGL_DEFINE_ERROR(UnknownLemma);
ECGL_DEFINE_ERROR(ParseError);

#undef ECGL_DEFINE_ERROR

}  // namespace ecgl
