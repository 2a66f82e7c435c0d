// common.hpp — shared error types and small numeric helpers

#pragma once

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace sshqed {

inline constexpr double pi = std::numbers::pi;

// Bad user-supplied parameters (out-of-range indices, invalid enums, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Failures of the numerics themselves (non-convergence, pole proximity, ...).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Uniform grid with inclusive endpoints; count >= 2.
std::vector<double> linspace(double lo, double hi, int count);

}  // namespace sshqed
