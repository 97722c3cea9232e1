#pragma once

#include <stdexcept>
#include <string>

namespace pvmcat {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDimensionError : Error {
    using Error::Error;
};

struct InvalidParameterError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

// A state vector collapsed to (numerically) zero, e.g. the odd cat at alpha = 0.
struct NullStateError : Error {
    using Error::Error;
};

// Pre- and post-selection are orthogonal (theta = pi); the weak value is undefined.
struct OrthogonalSelectionError : Error {
    using Error::Error;
};

// The requested computation would push significant amplitude past the Fock cutoff.
struct TruncationRiskError : Error {
    TruncationRiskError(const std::string& msg, double tail)
        : Error(msg), tail_mass(tail) {}
    double tail_mass;
};

// A closed-form expression left its domain (flags a transcription problem).
struct FormulaDomainError : Error {
    using Error::Error;
};

// Phase-space quadrature did not converge under grid refinement.
struct QuadratureError : Error {
    using Error::Error;
};

// A phase-space grid does not cover the state's support.
struct CoverageError : Error {
    using Error::Error;
};

}  // namespace pvmcat
