#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace varbasis {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A label falls outside the configured universe, or a vector literal is
/// malformed (duplicate label, coordinate lookup on an absent species).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A documented precondition was violated by the caller.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Inconsistent configuration: missing parameter entries, overlapping
/// jump payload bases, invalid threshold combinations.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Structured-text document could not be parsed. Carries the source name
/// and 1-based line number of the offending input.
class ParseError : public Error {
public:
    ParseError(const std::string& source, int line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what),
          source_(source),
          line_(line) {}

    const std::string& source() const noexcept { return source_; }
    int line() const noexcept { return line_; }

private:
    std::string source_;
    int line_;
};

/// Integration produced a non-finite coordinate. Carries the last hybrid
/// time at which the state was still valid.
class DivergenceError : public Error {
public:
    DivergenceError(double last_valid_t, std::uint64_t jump_count, const std::string& what)
        : Error(what), last_valid_t_(last_valid_t), jump_count_(jump_count) {}

    double last_valid_t() const noexcept { return last_valid_t_; }
    std::uint64_t jump_count() const noexcept { return jump_count_; }

private:
    double last_valid_t_;
    std::uint64_t jump_count_;
};

/// The semi-implicit update hit a near-singular per-coordinate solve;
/// the caller should reduce dt.
class StepSizeError : public Error {
public:
    using Error::Error;
};

}  // namespace varbasis
