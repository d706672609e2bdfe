#pragma once

#include <stdexcept>
#include <string>

namespace scarf {

// Base for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (s <= 0, E <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Evaluation requested on a lattice point x = k*a where V diverges.
class SingularityError : public Error {
public:
    using Error::Error;
};

// Operation called for a coupling whose regime does not support it.
class RegimeError : public Error {
public:
    using Error::Error;
};

// Polynomial recurrence or wavefunction assembly failed.
class ConstructionError : public Error {
public:
    using Error::Error;
};

// Integrator, root finder or quadrature did not converge.
class NumericError : public Error {
public:
    using Error::Error;
};

// Matching function has no sign change on the supplied bracket.
class BracketError : public Error {
public:
    using Error::Error;
};

// Contour passes too close to a pole or fails to converge.
class ContourError : public Error {
public:
    using Error::Error;
};

}  // namespace scarf
