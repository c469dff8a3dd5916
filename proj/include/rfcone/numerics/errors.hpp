#pragma once

#include <stdexcept>
#include <string>

namespace rfcone {

/// Base class for every numerical failure raised by the library.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bracket endpoints have the same sign; the caller must split the bracket.
class NoSignChange : public NumericalError {
public:
    NoSignChange(double lo, double hi, double f_lo, double f_hi)
        : NumericalError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "]: f(lo)=" + std::to_string(f_lo) + ", f(hi)=" + std::to_string(f_hi)) {}
};

class SingularMatrix : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Adaptive refinement hit its limit. The partial value and its error
/// estimate are still available to the caller.
class NonConvergence : public NumericalError {
public:
    NonConvergence(const std::string& what, double partial_value, double error_estimate)
        : NumericalError(what), partial_value_(partial_value), error_estimate_(error_estimate) {}

    double partial_value() const noexcept { return partial_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double partial_value_;
    double error_estimate_;
};

/// Argument outside the domain where a closed form is valid.
class DomainError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace rfcone
