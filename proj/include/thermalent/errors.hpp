#pragma once

#include <stdexcept>

namespace thermalent {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSquareError : Error { using Error::Error; };
struct NotHermitianError : Error { using Error::Error; };
struct NoConvergenceError : Error { using Error::Error; };
struct ShapeMismatchError : Error { using Error::Error; };
struct NotUnitVectorError : Error { using Error::Error; };
struct NotOrthonormalError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct NegativeTemperatureError : Error { using Error::Error; };
struct UnsupportedDimensionError : Error { using Error::Error; };
struct ResolutionTooSmallError : Error { using Error::Error; };
struct EtaAboveMeanEnergyError : Error { using Error::Error; };
struct SyntaxError : Error { using Error::Error; };

}  // namespace thermalent
