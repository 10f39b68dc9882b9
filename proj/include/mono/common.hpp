#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mono {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I_unit{0.0, 1.0};

// Error kinds surfaced by the numerical kernels. Callers (the solver, the CLI)
// distinguish them to decide between falling back, stopping a sweep, or failing.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a computed quantity contradicts a fixed convention, e.g. a value
// that must be real is not, or a lattice reduction does not land on a target.
struct ConventionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoSolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree <= 1 numerator S(x) = c0 + c1 x of the integrands S dx / y.
struct Linear {
    cplx c0{1.0};
    cplx c1{0.0};

    cplx operator()(cplx x) const { return c0 + c1 * x; }

    static Linear one() { return {1.0, 0.0}; }
    static Linear x() { return {0.0, 1.0}; }
};

}  // namespace mono
