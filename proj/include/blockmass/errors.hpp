#pragma once

#include <stdexcept>
#include <string>

namespace blockmass {

// Thrown when an exhaustive enumeration would exceed the configured cap.
// Exceeding the cap is always an error, never a silent truncation.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

} // namespace blockmass
