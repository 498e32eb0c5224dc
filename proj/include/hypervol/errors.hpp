#pragma once

#include <stdexcept>
#include <string>

namespace hypervol {

/// Argument outside the domain of a formula (non-finite input, point on the
/// ideal boundary, negative length, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested solid does not exist: the parameters violate a realizability
/// condition (imaginary delta, k4 not real, inconsistent angle triple).
class NotRealizableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operation is well defined but outside the supported range (e.g. dimension).
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical integration exhausted its evaluation budget. Carries the best
/// estimate obtained so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_value, double error_estimate)
        : std::runtime_error(what), best_value_(best_value), error_estimate_(error_estimate) {}

    double best_value() const noexcept { return best_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_value_;
    double error_estimate_;
};

}  // namespace hypervol
