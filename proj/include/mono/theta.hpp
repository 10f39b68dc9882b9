#pragma once

#include <array>
#include <vector>

#include "mono/es_solver.hpp"

namespace mono {

using ThetaChar = Characteristic;
using Vec2 = std::array<cplx, 2>;

// theta[alpha; beta](z; tau) = sum_n exp(i pi (n+alpha) tau (n+alpha) + 2 pi i (n+alpha)(z+beta)),
// truncated to the lattice ball where the Gaussian factor exceeds tol.
cplx theta2(const Vec2& z, const Mat2& tau, const ThetaChar& ch = {}, double tol = 1e-12);

// Radius (in lattice units, around the Gaussian peak) used by theta2.
double theta_radius(const Mat2& tau, double tol);

// U = (n0/3, n)/2 + (m0, m) tau / 2
Vec2 es_vector(const IntSet& s, const Mat2& tau);

struct FlowPoint {
    double lambda = 0;
    Vec2 z{};
    std::array<cplx, 3> values{};  // theta[(0,0); (k/3,0)], k = 0, 1, 2
};

struct H3Summary {
    std::array<double, 3> interior_min{};     // over lambda in [0.02, 1.98]
    std::array<double, 3> interior_median{};
    std::array<double, 3> at_start{}, at_end{}; // moduli at lambda = 0 and 2
    int vanishing_start = 0, vanishing_end = 0;
    double margin = 0;  // min interior minimum / max endpoint modulus among the vanishing ones

    bool ok() const;
};

inline constexpr double h3_vanish_rel = 1e-6;
inline constexpr double h3_interior_lo = 0.02, h3_interior_hi = 1.98;

// n equal intervals on [0, 2]; multiples of 50 put grid points on 0.02 and 1.98.
std::vector<double> lambda_grid(int n);

// Flow z = lambda U - K_inf+ + (1/3, 0) through the three factors.
std::vector<FlowPoint> h3_scan(const PeriodData& pd, const IntSet& s, const std::vector<double>& lambdas,
                               double tol = 1e-12);

H3Summary summarize(const std::vector<FlowPoint>& scan);

}  // namespace mono
