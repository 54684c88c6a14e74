#pragma once

#include <stdexcept>
#include <string>

namespace hardysin {

// Base of every numerical failure raised by the library. Callers that only
// care about "something went wrong" catch this; the CLI maps subclasses onto
// exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the operation's domain (s >= 1 where s < 1 is required,
// x outside (0, pi), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Gamma / digamma evaluated at a nonpositive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

// Series exhausted its term budget before reaching the target tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

class QuadratureError : public Error {
public:
    using Error::Error;
};

// Boundary-value extrapolation did not settle; usually the sampled function
// is not in the maximal domain.
class ExtrapolationError : public Error {
public:
    using Error::Error;
};

// z closer than the guard radius to an eigenvalue.
class NearPoleError : public Error {
public:
    using Error::Error;
};

class RootError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

// Test function violates the boundary hypotheses of an inequality variant.
class AdmissibilityError : public Error {
public:
    using Error::Error;
};

}  // namespace hardysin
