#pragma once

#include <stdexcept>
#include <string>

namespace ncf {

/// A digit stream ran dry before a construction reached its requested size.
struct InsufficientDigits : std::runtime_error {
    explicit InsufficientDigits(const std::string& msg) : std::runtime_error(msg) {}
};

/// An analyzed prefix was too short for counts to stabilize.
struct PrefixTooShort : std::runtime_error {
    explicit PrefixTooShort(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exact representation could not be formed or maintained.
struct RepresentationError : std::runtime_error {
    explicit RepresentationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numeric procedure (quadrature) failed to reach its tolerance.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ncf
