#include <doctest.h>

#include <cmath>
#include <random>

#include "mono/monopole.hpp"
#include "mono/quadrature.hpp"
#include "oracle.hpp"

using namespace mono;

namespace {

Curve sample_curve()
{
    // conjugate pairs, so the anchor value is real and positive
    return Curve{{cplx(1.1, -1.6), cplx(0.8, -1.8), cplx(-1.9, -0.2), cplx(-1.9, 0.2), cplx(0.8, 1.8),
                  cplx(1.1, 1.6)}};
}

double rel(cplx x, cplx ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

}  // namespace

TEST_CASE("gauss-kronrod on smooth and endpoint-singular integrands")
{
    const cplx v = integrate_gk([](double t) { return cplx(std::cos(t), std::exp(t)); }, 0.0, 2.0, 1e-13);
    CHECK(rel(v, cplx(std::sin(2.0), std::exp(2.0) - 1.0)) < 1e-13);
    // integrable 1/sqrt singularity handled by subdivision
    const cplx w = integrate_gk([](double t) { return cplx(1.0 / std::sqrt(t), 0.0); }, 0.0, 1.0, 1e-10, 0.0, 20000);
    CHECK(rel(w, 2.0) < 1e-9);
    CHECK_THROWS_AS(integrate_gk([](double t) { return cplx(1.0 / t, 0.0); }, 0.0, 1.0, 1e-12, 0.0, 50),
                    ConvergenceError);
}

TEST_CASE("sheet 1 is positive at the anchor and grows like x^3")
{
    const Curve c = sample_curve();
    const cplx y = sheet_value(c, c.anchor());
    CHECK(y.real() > 0.0);
    CHECK(std::abs(y.imag()) < 1e-12 * std::abs(y));
    const double x = 1e4;
    CHECK(rel(sheet_value(c, x) / (x * x * x), 1.0) < 1e-3);
    CHECK(rel(sheet_value(c, x, 2), -sheet_value(c, x)) < 1e-15);
}

TEST_CASE("segments between branch points match the tracking oracle")
{
    const Curve c = sample_curve();
    const oracle::Poly op{c.roots};
    const std::vector<cplx> via{cplx(0.0, 0.0)};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (i == j) continue;
            const cplx p = c.roots[i], q = c.roots[j];
            // skip chords that graze a third root
            bool clear = true;
            for (int k = 0; k < 6; ++k) {
                if (k == i || k == j) continue;
                const cplx d = (q - p) / std::abs(q - p);
                const double t = std::clamp(std::real((c.roots[k] - p) * std::conj(d)), 0.0, std::abs(q - p));
                clear = clear && std::abs(p + t * d - c.roots[k]) > 0.05;
            }
            if (!clear) continue;
            for (const Linear S : {Linear::one(), Linear::x()}) {
                const cplx lib = line_integral(c, {{p, q}, 1, via}, S);
                const cplx ref = oracle::segment(op, p, q, S.c0, S.c1, via);
                CHECK_MESSAGE(rel(lib, ref) < 1e-10, i << "->" << j);
            }
        }
}

TEST_CASE("orientation and sheet flips negate")
{
    const Curve c = sample_curve();
    const std::vector<cplx> via{cplx(0.0, 0.0)};
    const cplx fwd = line_integral(c, {{c.roots[2], c.roots[1]}, 1, via}, Linear::x());
    const cplx back = line_integral(c, {{c.roots[1], c.roots[2]}, 1, via}, Linear::x());
    const cplx other = line_integral(c, {{c.roots[2], c.roots[1]}, 2, via}, Linear::x());
    CHECK(rel(back, -fwd) < 1e-12);
    CHECK(rel(other, -fwd) < 1e-15);
}

TEST_CASE("closed loops")
{
    const Curve c = sample_curve();
    // a small square enclosing no branch point
    const std::vector<cplx> sq{cplx(2.5, 0.5), cplx(3.5, 0.5), cplx(3.5, 1.5), cplx(2.5, 1.5), cplx(2.5, 0.5)};
    const cplx z = line_integral(c, {sq, 1, {}}, Linear::x());
    CHECK(std::abs(z) < 1e-12);

    // counterclockwise loop around the cut B3-B4 only: both sides run against
    // B4 -> B3 once y changes sign across the cut
    const cplx b3 = c.roots[2], b4 = c.roots[3];
    const std::vector<cplx> loop{cplx(-1.5, 0.0), cplx(-1.5, 0.6), cplx(-2.4, 0.6), cplx(-2.4, -0.6),
                                 cplx(-1.5, -0.6), cplx(-1.5, 0.0)};
    const cplx L = line_integral(c, {loop, 1, {}}, Linear::one());
    const cplx cut = line_integral(c, {{b4, b3}, 1, {cplx(-1.0, 0.0)}}, Linear::one());
    CHECK(rel(L, -2.0 * cut) < 1e-10);
}

TEST_CASE("path independence under small waypoint perturbations")
{
    const Curve c = sample_curve();
    const cplx p = c.roots[0], q = c.roots[1];
    const std::vector<cplx> via{cplx(0.0, 0.0)};
    const cplx base = line_integral(c, {{p, q}, 1, via}, Linear::x());
    const cplx mid = 0.5 * (p + q);
    const cplx split = line_integral(c, {{p, mid, q}, 1, via}, Linear::x());
    const cplx bent = line_integral(c, {{p, mid + cplx(1e-3, -1e-3), q}, 1, via}, Linear::x());
    CHECK(rel(split, base) < 1e-11);
    CHECK(rel(bent, base) < 1e-9);
}

TEST_CASE("infinity integrals")
{
    const Curve c = sample_curve();
    const double x1 = 4.0, x2 = 3.0;
    for (const Linear S : {Linear::one(), Linear::x()}) {
        const cplx i1 = infinity_integral(c, S, x1, 1, 1.0);
        const cplx i2 = infinity_integral(c, S, x2, 1, 1.0);
        const cplx seg = line_integral(c, {{x1, x2}, 1, {}}, S);
        CHECK(rel(i2, i1 + seg) < 1e-10);
        // the other point at infinity carries the other sheet
        CHECK(rel(infinity_integral(c, S, x1, -1, 1.0), -i1) < 1e-12);
        // a tilted ray in the same homotopy class
        CHECK(rel(infinity_integral(c, S, x1, 1, cplx(1.0, 0.3)), i1) < 1e-10);
    }
    // S = x decays like 1/x^2 along the ray; compare with the leading term
    const double big = 1e3;
    const cplx far = infinity_integral(c, Linear::x(), big, 1, 1.0);
    CHECK(rel(far, -1.0 / big) < 1e-2);
}

TEST_CASE("branch-point proximity is an error")
{
    const Curve c = sample_curve();
    const cplx r = c.roots[0];
    CHECK_THROWS_AS(line_integral(c, {{r + cplx(-1.0, 1e-8), r + cplx(1.0, 1e-8)}, 1, {}}, Linear::one()),
                    DegeneracyError);
    CHECK_THROWS_AS(line_integral(c, {{cplx(2.0, 0.0), r, cplx(0.0, 0.0)}, 1, {}}, Linear::one()),
                    DegeneracyError);
}
