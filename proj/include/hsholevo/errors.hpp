#pragma once

#include <stdexcept>
#include <string>

namespace hsholevo {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shape mismatches and instances exceeding the configured dimension cap.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Iterative numerics that failed to converge, or trace results whose
// imaginary part exceeds the guard tolerance.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Structural validation failures. Each distinct failure mode carries its
// own kind so callers and tests can tell them apart.
class ValidationError : public Error {
public:
    enum class Kind {
        NotFinite,
        NotHermitian,
        NotPositive,
        TraceNotOne,
        NotIdempotent,
        NotOrthogonal,
        NotComplete,
        BadProbability,
        BadConfig,
    };

    ValidationError(Kind kind, const std::string& message)
        : Error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

} // namespace hsholevo
