#pragma once

#include <stdexcept>

namespace abessel {

// Base class for every domain error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositivePoint : Error { using Error::Error; };
struct IrrationalValue : Error { using Error::Error; };
struct NonzeroConstantTerm : Error { using Error::Error; };
struct OddPowerSurvives : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct BadParity : Error { using Error::Error; };
struct NegativeOrder : Error { using Error::Error; };
struct ZeroLSingularity : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DivergentMoment : Error { using Error::Error; };
struct NonIntegerExponent : Error { using Error::Error; };

} // namespace abessel
