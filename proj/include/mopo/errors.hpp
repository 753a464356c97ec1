#ifndef MOPO_ERRORS_HPP
#define MOPO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mopo {

// Base class for all library failures.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad run configuration or unusable input file (CLI exit code 2).
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Malformed data file (material database, table). Subtype of ConfigError
// so the CLI maps it to the same exit code.
struct ParseError : ConfigError {
    explicit ParseError(const std::string& msg) : ConfigError(msg) {}
};

// Physical-domain violation: wavelength outside a material's validity
// window, gain outside [0, pi/2), and similar (CLI exit code 3).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Gain at or beyond the oscillation threshold g = pi/2, where the
// below-threshold coefficients diverge.
struct ThresholdError : DomainError {
    explicit ThresholdError(const std::string& msg) : DomainError(msg) {}
};

// Numeric failure: root bracket without sign change, iteration cap
// exhausted (CLI exit code 4).
struct SolverError : Error {
    explicit SolverError(const std::string& msg) : Error(msg) {}
};

} // namespace mopo

#endif
