#pragma once

#include <stdexcept>
#include <string>

namespace numrad {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand is not square, or operand shapes do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Operand contains NaN or Inf.
class NonFiniteError : public Error {
public:
    using Error::Error;
};

/// An iterative decomposition hit its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Input expected to be Hermitian is outside the symmetrization tolerance.
class NotHermitianError : public Error {
public:
    using Error::Error;
};

/// Input expected to be positive semidefinite has an eigenvalue below -tol.
class NotPsdError : public Error {
public:
    using Error::Error;
};

/// A parameter is outside its admissible range (alpha, r, grid size, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A computed quantity contradicts an inequality that must hold.
///
/// Raised for example when a radicand that is provably non-negative comes out
/// below -tol: this signals an implementation bug, not bad input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace numrad
