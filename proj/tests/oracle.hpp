#pragma once

// Reference integrals for the tests. Deliberately built differently from the
// library quadrature: y is followed by small steps from the anchor (nearest
// square root wins at each step) and segments use a fixed composite
// Gauss-Legendre rule in the angle variable.

#include <vector>

#include "mono/common.hpp"

namespace oracle {

using mono::cplx;

// y^2 = prod (x - r). Anchor: the real point max Re r + max(1, max |r|), y > 0.
struct Poly {
    std::vector<cplx> roots;
    double anchor() const;
    cplx value(cplx x) const;
};

// y at `to`, continued from the anchor through `via`.
cplx track(const Poly& c, const std::vector<cplx>& via, cplx to);

// Integral of (s0 + s1 x) dx / y along p -> q. y is fixed at the segment
// midpoint by tracking from the anchor through `via`, then followed along the
// segment in both directions.
cplx segment(const Poly& c, cplx p, cplx q, cplx s0, cplx s1, const std::vector<cplx>& via,
             int panels = 64);

// Real roots only: integral of S dx / y along the real axis from p to q, with
// y taken from the upper half plane (x + i0). Splits at every root in between.
cplx real_axis_upper(const Poly& c, double p, double q, cplx s0, cplx s1);

// Direct quadrature of the integral of dphi / sqrt(a^2 cos^2 + b^2 sin^2) on [0, pi/2].
double elliptic_direct(double a, double b);

}  // namespace oracle
