#pragma once

#include <stdexcept>
#include <string>

namespace cylbif {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The period sits on (or too close to) a value where the radial problem
/// has no solution. `period` is the offending period, `singular` the nearest
/// singular value it collided with.
class SingularPeriodError : public Error {
public:
    SingularPeriodError(double period, double singular, const std::string& what)
        : Error(what), period_(period), singular_(singular) {}

    double period() const noexcept { return period_; }
    double singular() const noexcept { return singular_; }

private:
    double period_;
    double singular_;
};

/// An iterative method did not converge or could not certify its result.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// A search was requested over a range larger than the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace cylbif
