#pragma once

namespace mono {

// One iterate; kept with a >= b > 0.
struct AgmState {
    double a, b;
    int n = 0;
    AgmState next() const;
};

struct AgmResult {
    double mean;
    int iterations;
};

// Arithmetic-geometric mean of two positive reals. Stops once
// |a_n - b_n| < tol * a_n, at most 64 steps.
AgmResult agm_run(double a, double b, double tol = 1e-15);

double agm(double a, double b, double tol = 1e-15);

// Complete integral of dphi / sqrt(a^2 cos^2 + b^2 sin^2) over [0, pi/2].
double elliptic_integral_agm(double a, double b);

}  // namespace mono
