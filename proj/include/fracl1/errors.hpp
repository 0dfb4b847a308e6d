#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracl1 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (alpha not in
/// (0,1), negative step, evaluation point x <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a pole (Gamma at a nonpositive integer, zeta at 1).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A series or iteration failed to reach its tolerance within the term cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Eliminated pivot too small, or a time-stepping denominator vanished.
class SingularError : public Error {
public:
    using Error::Error;
};

/// Not enough samples / levels for the requested rule.
class InsufficientSamplesError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed expression text. `offset()` is the byte offset of the offending
/// token in the source string.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Invalid study configuration (unknown key, bad value, missing field).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace fracl1
