#pragma once

#include <stdexcept>
#include <string>

namespace cags {

// All numerics run in fp64. The runtime mode only controls how aggressively
// intermediate results are validated: `verify` checks finiteness after tensor
// ops and renderer stages, `fast` skips those checks.
enum class ComputeMode { verify, fast };

ComputeMode compute_mode();
void set_compute_mode(ComputeMode mode);

// Shape/dimension mismatch between operands.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration value or unknown key.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / serialization failure.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// NaN/Inf reached a value that must stay finite.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// API misuse (e.g. backward on a non-scalar node, mismatched saved state).
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// Degenerate numeric input (zero quaternion and the like).
struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cags
