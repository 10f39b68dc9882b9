#include "mono/hyperpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mono {

namespace {

// Imaginary residue tolerated when a quantity must come out real.
constexpr double realness_tol = 1e-12;

double as_real(cplx z, double scale, const char* what)
{
    if (std::abs(z.imag()) > realness_tol * std::max(1.0, scale)) {
        std::ostringstream os;
        os << what << " is not real: " << z;
        throw ConventionError(os.str());
    }
    return z.real();
}

}  // namespace

Quadratic roots_of(const QuadCoeffs& q)
{
    if (q.c2 == cplx{}) throw DegeneracyError("roots_of: leading coefficient vanishes");
    const cplx b = q.c1 / q.c2, c = q.c0 / q.c2;
    const cplx s = std::sqrt(b * b - 4.0 * c);
    // pick the sign avoiding cancellation, recover the other root from the product
    const cplx big = (std::real(std::conj(b) * s) >= 0.0) ? -0.5 * (b + s) : -0.5 * (b - s);
    cplx r1 = big, r2 = (big == cplx{}) ? cplx{} : c / big;
    if (r2.real() < r1.real()) std::swap(r1, r2);
    return {r1, r2};
}

double min_relative_separation(const SexticModel& m)
{
    const auto r = m.roots();
    double best = INFINITY;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            const double mag = std::max({std::abs(r[i]), std::abs(r[j]), 1e-300});
            best = std::min(best, std::abs(r[i] - r[j]) / mag);
        }
    return best;
}

void require_nondegenerate(const SexticModel& m, double threshold)
{
    const auto r = m.roots();
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            const double mag = std::max({std::abs(r[i]), std::abs(r[j]), 1e-300});
            if (std::abs(r[i] - r[j]) < threshold * mag) {
                std::ostringstream os;
                os.precision(12);
                os << "degenerate sextic: roots " << r[i] << " and " << r[j] << " collide";
                throw DegeneracyError(os.str());
            }
        }
}

SexticModel real_model(const std::array<double, 6>& r)
{
    return {{r[0], r[1]}, {r[2], r[3]}, {r[4], r[5]}, false};
}

SexticModel conjugate_model(cplx a, cplx b, cplx c)
{
    return {{a, std::conj(a)}, {b, std::conj(b)}, {c, std::conj(c)}, true};
}

QuadCoeffs bracket(const QuadCoeffs& f, const QuadCoeffs& g)
{
    // f' = c1 + 2 c2 x; the cubic terms cancel
    return {f.c1 * g.c0 - g.c1 * f.c0,
            2.0 * (f.c2 * g.c0 - g.c2 * f.c0),
            f.c2 * g.c1 - g.c2 * f.c1};
}

QuadCoeffs bracket(const Quadratic& f, const Quadratic& g) { return bracket(f.coeffs(), g.coeffs()); }

ResolventTriple resolvent_triple(const SexticModel& m)
{
    require_nondegenerate(m);
    return {bracket(m.Q, m.R), bracket(m.R, m.P), bracket(m.P, m.Q)};
}

ResolventRoots resolvent_roots(const SexticModel& m)
{
    const cplx a = m.P.r1, ap = m.P.r2, b = m.Q.r1, bp = m.Q.r2, c = m.R.r1, cp = m.R.r2;
    double scale = 1.0;
    for (auto z : m.roots()) scale = std::max(scale, std::abs(z));

    const cplx A = std::sqrt((b - c) * (b - cp) * (bp - c) * (bp - cp));
    const cplx B = std::sqrt((c - a) * (c - ap) * (cp - a) * (cp - ap));
    const cplx C = std::sqrt((a - b) * (a - bp) * (ap - b) * (ap - bp));

    const cplx du = c + cp - b - bp, dv = c + cp - a - ap, dw = b + bp - a - ap;
    for (cplx d : {du, dv, dw})
        if (std::abs(d) < degeneracy_threshold * scale)
            throw DegeneracyError("resolvent_roots: vanishing denominator");

    const cplx nu = c * cp - b * bp, nv = c * cp - a * ap, nw = b * bp - a * ap;
    ResolventRoots out{};
    out.u = as_real((nu - A) / du, scale, "u");
    out.up = as_real((nu + A) / du, scale, "u'");
    out.v = as_real((nv - B) / dv, scale, "v");
    out.vp = as_real((nv + B) / dv, scale, "v'");
    out.w = as_real((nw - C) / dw, scale, "w");
    out.wp = as_real((nw + C) / dw, scale, "w'");
    return out;
}

cplx delta_det(const QuadCoeffs& P, const QuadCoeffs& Q, const QuadCoeffs& R)
{
    return P.c0 * (Q.c1 * R.c2 - Q.c2 * R.c1) - P.c1 * (Q.c0 * R.c2 - Q.c2 * R.c0) +
           P.c2 * (Q.c0 * R.c1 - Q.c1 * R.c0);
}

cplx delta_det(const SexticModel& m) { return delta_det(m.P.coeffs(), m.Q.coeffs(), m.R.coeffs()); }

}  // namespace mono
