#ifndef IGFV_CORE_ERRORS_HPP
#define IGFV_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace igfv {

// Bad user input: unknown case/scheme, invariant violations, malformed files.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Unrecoverable solver failure: NaN fields, invalid states past all fallbacks.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace igfv

#endif
