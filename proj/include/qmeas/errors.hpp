#pragma once

#include <stdexcept>
#include <string>

namespace qmeas {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid input: dimension mismatches, malformed parameters, contract
/// violations detectable before any numerics run. Maps to CLI exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Numerical failure: PSD violation beyond tolerance, non-convergence,
/// zero-probability branches. Maps to CLI exit code 2.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A measurement branch with probability below threshold was requested;
/// signalled explicitly instead of dividing by ~0.
class ZeroProbabilityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace qmeas
