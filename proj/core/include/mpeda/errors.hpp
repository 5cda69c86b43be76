#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mpeda {

enum class ValidationCode : std::uint8_t {
    kNonFinite,
    kNonPositiveMajorAxis,
    kNonPositiveMinorAxis,
    kAxesNotOrdered,
    kNonPositiveStep,
    kStepExceedsMinorAxis,
    kStepNotInLowestTerms,
};

std::string_view to_string(ValidationCode code);

/// Raised when an ellipse or grid step breaks one of the input assumptions.
/// Each code maps to one assumption so callers can report it precisely.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(ValidationCode code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}

    ValidationCode code() const noexcept { return code_; }

private:
    ValidationCode code_;
};

/// A decision state was handed to the stepper of the other region.
class RegionMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mpeda
