#pragma once

#include <stdexcept>
#include <string>

namespace mmp {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent caller input (dimension mismatch, odd moment
// count, unordered switch points, bad file contents).
class InputError : public Error {
public:
    using Error::Error;
};

// A triangular solve hit a zero (or vanishing) diagonal element.
class SingularityError : public Error {
public:
    SingularityError(const std::string& what, double leading)
        : Error(what), leading_(leading) {}
    double leading_value() const { return leading_; }

private:
    double leading_ = 0.0;
};

// Input data is scaled so extremely that intermediate quantities overflow;
// rescaling the domain is advised.
class ScalingError : public Error {
public:
    using Error::Error;
};

// An iterative numerical kernel (eigenvalue / root extraction) failed to
// converge.
class NumericalError : public Error {
public:
    using Error::Error;
};

// A Hankel system is numerically rank deficient. For moment data this
// signals coincident switch points (a zero-length interval collapses the
// problem to a lower order).
class DegeneracyError : public Error {
public:
    using Error::Error;
};

// The moment data cannot come from a valid switch configuration: complex
// eigenvalues beyond tolerance, or recovered points outside the domain.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// Recovered odd/even point families fail to interleave beyond the tie
// tolerance; a specific infeasibility symptom.
class InconsistencyError : public InfeasibleError {
public:
    using InfeasibleError::InfeasibleError;
};

}  // namespace mmp
