#pragma once

#include <stdexcept>
#include <string>

namespace arbreak {

/// Base for every error raised by the library. `kind()` is the short
/// machine-readable tag the CLI puts into its error JSON.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual const char* kind() const noexcept = 0;
};

/// Invalid parameters in a law, spec, target or option set.
class ConfigError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "config"; }
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "domain"; }
};

/// No admissible break candidate, or a degenerate segment where one is required.
class EstimationError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "estimation"; }
};

/// Malformed input file. `line()` is 1-based; 0 when not line-specific.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}
    [[nodiscard]] const char* kind() const noexcept override { return "parse"; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "io"; }
};

}  // namespace arbreak
