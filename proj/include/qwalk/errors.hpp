#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Base for every failure raised by the simulator. Numerical-invariant
// failures map to CLI exit code 2, ConfigError to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NormalizationError : public Error { using Error::Error; };
class BoundsError : public Error { using Error::Error; };
class DegenerateStateError : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class SpecError : public Error { using Error::Error; };
class LightConeError : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };
class DestructiveInterferenceError : public Error { using Error::Error; };
class DegeneratePostselectionError : public Error { using Error::Error; };
class RegimeError : public Error { using Error::Error; };
class BudgetError : public Error { using Error::Error; };
class ChannelError : public Error { using Error::Error; };
class DimensionError : public Error { using Error::Error; };

class ConfigError : public Error {
public:
    ConfigError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace qwalk
