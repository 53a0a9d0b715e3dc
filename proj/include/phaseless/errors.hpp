#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace phaseless {

/// Parameter outside the accepted domain (m <= 1, nonpositive scale, empty grid, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base for failures of a numerical procedure on otherwise valid input.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Node doubling (or truncation) changed a quadrature result beyond tolerance.
class QuadratureError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A log-domain quantity does not fit in a double after exponentiation.
class OverflowError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Too few usable terms for a limsup / liminf surrogate.
class InsufficientData : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Jensen's formula requires f(0) != 0.
class ZeroAtOrigin : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Signal with zero L2 norm where a normalisation is needed.
class ZeroNorm : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Growth fit has too few finite log-magnitudes.
class FitDegenerate : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Optional sink for non-fatal diagnostics. Functions taking a `Warnings*`
/// append human-readable notes when it is non-null.
using Warnings = std::vector<std::string>;

inline void warn(Warnings* sink, std::string message) {
    if (sink != nullptr) {
        sink->push_back(std::move(message));
    }
}

}  // namespace phaseless
