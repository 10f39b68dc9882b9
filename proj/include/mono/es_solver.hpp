#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mono/monopole.hpp"

namespace mono {

struct SolverOptions {
    double tol_g = 1e-12;          // absolute tolerance on g in the root refinement
    double tol_residual = 1e-8;    // relative to the largest pair integral
    Evaluator evaluator = Evaluator::Agm;
    bool verify_with_oracle = true;
    QuadOptions quad{};
};

struct SolutionPoint {
    double a = 0, g = 0, beta = 0;
    cplx residual{};          // oracle residual when verified, else the evaluator's
    double residual_scale = 1;
    Mat2 tau{};
    IntSet intset{};
};

struct Residual {
    cplx value;
    double scale;  // largest |J| entering the cycle
};

Residual es_residual_scaled(double a, double g, const IntSet& s, Evaluator ev = Evaluator::Agm,
                            const QuadOptions& quad = {});

// Integral of dX/Y over the cycle c(intset).
cplx es_residual(double a, double g, const IntSet& s, Evaluator ev = Evaluator::Agm,
                 const QuadOptions& quad = {});

// Root of the residual in g nearest to g_init. The residual is real on real
// (a, g) because the cycle is anti-invariant under the real involution, so a
// sign change brackets the root.
double solve_g(double a, const IntSet& s, double g_init, const SolverOptions& opt = {},
               double initial_step = 0.05);

// beta = (integral of X dX/Y over c / 6)^3
double beta_from(double a, double g, const IntSet& s, Evaluator ev = Evaluator::Agm,
                 const QuadOptions& quad = {});

struct Unscaled {
    double alpha, gamma;
};
Unscaled unscale(double a, double g, double beta);

SolutionPoint solve_point(double a, const IntSet& s, double g_init, const SolverOptions& opt = {},
                          double initial_step = 0.05);

// Grid from a_from towards a_to with `step`, switching to `step_fine` past
// `fine_from` (ignored when step_fine <= 0). Endpoints included when hit.
std::vector<double> sweep_grid(double a_from, double a_to, double step, double fine_from = 0,
                               double step_fine = 0);

// a_from, a_from*ratio, ... up to and including the first value beyond a_to
// (same sign as a_from, ratio > 1). Used to reach far into the a < 0 tail.
std::vector<double> geometric_grid(double a_from, double a_to, double ratio);

struct SweepResult {
    std::vector<SolutionPoint> points;
    std::optional<std::string> stop_reason;  // set when the sweep ended early
};

// March along a_values (the first one is the seed abscissa, solved from
// g_seed), warm-starting each solve from a linear extrapolation.
SweepResult continuation_sweep(const std::vector<double>& a_values, const IntSet& s, double g_seed,
                               const SolverOptions& opt = {});

// Seed g for the tetrahedral start of each integer set.
double tetrahedral_seed(const IntSet& s);

}  // namespace mono
