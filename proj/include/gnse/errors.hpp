#pragma once

#include <stdexcept>
#include <string>

namespace gnse {

// Bad argument values (negative times, q <= 1, empty bands, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mismatched field layouts, bad config files, missing keys.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A Gevrey sum left the representable range; carries the offending shell.
struct SaturationError : std::runtime_error {
    int shell;
    SaturationError(const std::string& msg, int shell_) : std::runtime_error(msg), shell(shell_) {}
};

// Radius estimation failed (too few populated shells, degenerate fit).
struct EstimationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gnse
