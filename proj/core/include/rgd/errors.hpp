#pragma once

#include <stdexcept>
#include <string>

namespace rgd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid arguments or preconditions violated by the caller.
class DomainError : public Error {
public:
    using Error::Error;
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class OddDimension : public DomainError {
public:
    using DomainError::DomainError;
};

class DegenerateArguments : public DomainError {
public:
    using DomainError::DomainError;
};

// Numerical failures: the inputs are fine but the computation is not.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

class NumericallySingular : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

class ToleranceNotMet : public NumericalFailure {
public:
    ToleranceNotMet(const std::string& what, double value, double errorBound)
        : NumericalFailure(what), value_(value), errorBound_(errorBound) {}
    double value() const { return value_; }
    double errorBound() const { return errorBound_; }

private:
    double value_;
    double errorBound_;
};

class InsufficientSamples : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

}  // namespace rgd
