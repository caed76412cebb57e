#pragma once

#include <stdexcept>
#include <string>

namespace emnl {

// Configuration and schema problems. The CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Data validation failures (bad rows, incompatible artifacts). Exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical or runtime failures during estimation. Exit code 1.
struct FitError : std::runtime_error {
    explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace emnl
