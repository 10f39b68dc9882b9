#include "mono/agm_elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mono/common.hpp"

namespace mono {

AgmState AgmState::next() const
{
    AgmState s{0.5 * (a + b), std::sqrt(a * b), n + 1};
    // the geometric mean can overshoot the arithmetic one by an ulp
    if (s.b > s.a) s.b = s.a;
    return s;
}

AgmResult agm_run(double a, double b, double tol)
{
    if (!(a > 0.0) || !(b > 0.0) || !(tol > 0.0))
        throw DomainError("agm: arguments must be positive, got a=" + std::to_string(a) +
                          " b=" + std::to_string(b));
    AgmState s{std::max(a, b), std::min(a, b)};
    while (s.a - s.b >= tol * s.a) {
        if (s.n == 64) throw ConvergenceError("agm: no convergence after 64 steps");
        s = s.next();
    }
    return {0.5 * (s.a + s.b), s.n};
}

double agm(double a, double b, double tol) { return agm_run(a, b, tol).mean; }

double elliptic_integral_agm(double a, double b) { return pi / (2.0 * agm(a, b)); }

}  // namespace mono
