#ifndef SASAKI_ERRORS_HPP
#define SASAKI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sasaki {

// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// divide_exact: divisor does not divide the dividend.
struct NotDivisible : Error {
    using Error::Error;
};

// shift_basis: scale factor of the target basis is zero.
struct ZeroScale : Error {
    using Error::Error;
};

// Root counting / positivity queries on the zero polynomial.
struct ZeroPolynomial : Error {
    using Error::Error;
};

// Integrand (az+b)^{-n} has a zero of az+b on the integration interval.
struct PoleOnInterval : Error {
    using Error::Error;
};

// Exact linear system has no unique solution (zero pivot completion).
struct SingularSystem : Error {
    using Error::Error;
};

// A weight polynomial required to be positive on [-1,1] is not.
struct NonPositiveWeight : Error {
    using Error::Error;
};

// Perturbation requested with extremal affine function identically zero.
struct DegenerateExtremalAffine : Error {
    using Error::Error;
};

// Symbolic elimination exceeded the configured degree / coefficient caps.
struct SymbolicEliminationOverflow : Error {
    using Error::Error;
};

// 2x2 moment matrix of the integration-by-parts system is singular.
struct SingularMoments : Error {
    using Error::Error;
};

// Input data violates the admissibility constraints.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace sasaki

#endif
