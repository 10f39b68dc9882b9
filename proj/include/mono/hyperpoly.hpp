#pragma once

#include <array>

#include "mono/common.hpp"

namespace mono {

// c0 + c1 x + c2 x^2
struct QuadCoeffs {
    cplx c0{}, c1{}, c2{};

    cplx operator()(cplx x) const { return c0 + x * (c1 + x * c2); }
    QuadCoeffs operator-() const { return {-c0, -c1, -c2}; }
};

// Monic quadratic (x - r1)(x - r2), stored by its roots.
struct Quadratic {
    cplx r1{}, r2{};

    QuadCoeffs coeffs() const { return {r1 * r2, -(r1 + r2), 1.0}; }
    cplx operator()(cplx x) const { return (x - r1) * (x - r2); }
};

// Roots of c0 + c1 x + c2 x^2, ordered so that Re r1 <= Re r2.
Quadratic roots_of(const QuadCoeffs& q);

// y^2 + P Q R = 0 with P = (a,a'), Q = (b,b'), R = (c,c').
struct SexticModel {
    Quadratic P, Q, R;
    bool conjugate_paired = false;

    std::array<cplx, 6> roots() const { return {P.r1, P.r2, Q.r1, Q.r2, R.r1, R.r2}; }
};

// Relative separation below which two roots count as colliding.
inline constexpr double degeneracy_threshold = 1e-9;

// Throws DegeneracyError if two roots of m are closer than the threshold.
void require_nondegenerate(const SexticModel& m, double threshold = degeneracy_threshold);
double min_relative_separation(const SexticModel& m);

// Real model from six increasing reals a < a' < b < b' < c < c'.
SexticModel real_model(const std::array<double, 6>& r);

// Conjugate-paired model P = (a, conj a) etc.
SexticModel conjugate_model(cplx a, cplx b, cplx c);

// f' g - g' f
QuadCoeffs bracket(const QuadCoeffs& f, const QuadCoeffs& g);
QuadCoeffs bracket(const Quadratic& f, const Quadratic& g);

struct ResolventTriple {
    QuadCoeffs U, V, W;
};
ResolventTriple resolvent_triple(const SexticModel& m);

struct ResolventRoots {
    double u, up, v, vp, w, wp;
};

// Closed-form roots of U, V, W, with u < u' etc. whenever the square roots
// A, B, C are positive.
ResolventRoots resolvent_roots(const SexticModel& m);

// Determinant of the coefficient rows (c0, c1, c2) of P, Q, R.
cplx delta_det(const QuadCoeffs& P, const QuadCoeffs& Q, const QuadCoeffs& R);
cplx delta_det(const SexticModel& m);

}  // namespace mono
