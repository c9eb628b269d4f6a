#pragma once

#include <stdexcept>
#include <string>

namespace anyonsim {

// Violation of a physics invariant (miscalibrated labeling, oracle/statevector
// disagreement, failed gate self-check). The CLI maps these to exit code 2;
// plain contract errors (std::invalid_argument etc.) map to exit code 1.
struct PhysicsViolation : std::runtime_error {
    explicit PhysicsViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace anyonsim
