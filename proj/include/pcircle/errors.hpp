#pragma once

#include <stdexcept>
#include <string>

namespace pcircle {

// Status values are shared with the C API and double as CLI exit codes.
enum class Status : int {
    ok = 0,
    argument_error = 2,
    domain_error = 3,
    accuracy_error = 4,
    pole_error = 5,
};

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& what) : std::runtime_error(what), status_(status) {}
    Status status() const noexcept { return status_; }

private:
    Status status_;
};

// Malformed or out-of-contract arguments (bad sizes, bad enum values, ...).
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(Status::argument_error, what) {}
};

// Mathematically invalid input (outside the function's domain).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(Status::domain_error, what) {}
};

// Division by a vanishing trig denominator; carries the offending function name.
class PoleError : public Error {
public:
    PoleError(std::string function, const std::string& what)
        : Error(Status::pole_error, what), function_(std::move(function)) {}
    const std::string& function() const noexcept { return function_; }

private:
    std::string function_;
};

// Quadrature or solver did not reach the requested tolerance. Carries the best
// estimate so callers can still inspect it.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double best_value, double best_error)
        : Error(Status::accuracy_error, what), best_value_(best_value), best_error_(best_error) {}
    double best_value() const noexcept { return best_value_; }
    double best_error() const noexcept { return best_error_; }

private:
    double best_value_;
    double best_error_;
};

// Bracketing failures and other root-finder breakdowns. Shares the accuracy
// status code (CLI exit 4).
class SolverError : public Error {
public:
    explicit SolverError(const std::string& what) : Error(Status::accuracy_error, what) {}
};

} // namespace pcircle
