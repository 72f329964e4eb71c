#pragma once

// Error hierarchy shared by every screening module.
//
// Usage errors (bad parameters, malformed input files) derive from
// UsageError; everything else is a mathematical domain failure.  The CLI
// maps the two families to distinct exit codes.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace screening {

class ScreeningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Usage errors
// ---------------------------------------------------------------------------

class UsageError : public ScreeningError {
public:
    using ScreeningError::ScreeningError;
};

// A constructor argument outside its admissible range.
class InvalidParameterError : public UsageError {
public:
    InvalidParameterError(std::string parameter, const std::string& what)
        : UsageError(what), parameter_(std::move(parameter)) {}
    const std::string& parameter() const noexcept { return parameter_; }

private:
    std::string parameter_;
};

class ParseError : public UsageError {
public:
    ParseError(std::size_t line, const std::string& what)
        : UsageError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// ---------------------------------------------------------------------------
// Domain errors
// ---------------------------------------------------------------------------

class DomainError : public ScreeningError {
public:
    using ScreeningError::ScreeningError;
};

// ppv evaluated at a 0/0 point.
class IndeterminateError : public DomainError {
public:
    using DomainError::DomainError;
};

class DegenerateTestError : public DomainError {
public:
    using DomainError::DomainError;
};

// First algebraic form of the prevalence threshold divides by (epsilon - 1).
class EpsilonOneError : public DomainError {
public:
    using DomainError::DomainError;
};

// beta collapses to 0 (specificity 1) or pi/2 (sensitivity 0).
class DegenerateAngleError : public DomainError {
public:
    DegenerateAngleError(double limit, const std::string& what)
        : DomainError(what), limit_(limit) {}
    double limit() const noexcept { return limit_; }

private:
    double limit_;
};

class InfiniteLRError : public DomainError {
public:
    using DomainError::DomainError;
};

class ZeroLRError : public DomainError {
public:
    using DomainError::DomainError;
};

class NonConvergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

// Two independent routes to the same answer disagreed.
class InconsistencyError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace screening
