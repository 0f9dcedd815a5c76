#pragma once

#include <stdexcept>
#include <string>

namespace maxorder {

// Base for every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MAXORDER_DEFINE_ERROR(Name)          \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    }

MAXORDER_DEFINE_ERROR(InvalidModulus);
MAXORDER_DEFINE_ERROR(DivisionByZero);
MAXORDER_DEFINE_ERROR(NotASquare);
MAXORDER_DEFINE_ERROR(SingularCurve);
MAXORDER_DEFINE_ERROR(BadReduction);
MAXORDER_DEFINE_ERROR(UnsupportedPrime);
MAXORDER_DEFINE_ERROR(InvalidPoint);
MAXORDER_DEFINE_ERROR(TwoTorsionX);
MAXORDER_DEFINE_ERROR(InsufficientData);
MAXORDER_DEFINE_ERROR(UndefinedResultant);
MAXORDER_DEFINE_ERROR(LeadingCoefficientVanishes);
MAXORDER_DEFINE_ERROR(UsageError);

#undef MAXORDER_DEFINE_ERROR

}  // namespace maxorder
