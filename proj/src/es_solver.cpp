#include "mono/es_solver.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <sstream>

namespace mono {

Residual es_residual_scaled(double a, double g, const IntSet& s, Evaluator ev, const QuadOptions& quad)
{
    const BranchPointSet bps = quotient_branch_points({a, g});
    const PairValues v = pair_values(bps, Linear::one(), ev, quad);
    const CycleExpr c = cycle_c(s);
    double scale = 0.0;
    for (auto [k, p] : cycle_to_pairs(c)) scale = std::max(scale, std::abs(v[p]));
    return {cycle_integral(c, v), std::max(scale, 1e-300)};
}

cplx es_residual(double a, double g, const IntSet& s, Evaluator ev, const QuadOptions& quad)
{
    return es_residual_scaled(a, g, s, ev, quad).value;
}

double solve_g(double a, const IntSet& s, double g_init, const SolverOptions& opt, double initial_step)
{
    auto f = [&](double g) { return es_residual(a, g, s, opt.evaluator, opt.quad).real(); };

    // walk outwards on both sides with growing steps until the sign changes
    const double f0 = f(g_init);
    if (f0 == 0.0) return g_init;
    double last_g[2] = {g_init, g_init}, last_f[2] = {f0, f0};
    double lo = 0, hi = 0, flo = 0, fhi = 0;
    bool found = false;
    double h = initial_step;
    for (int it = 0; it < 60 && !found; ++it, h *= 1.5) {
        for (int side = 0; side < 2 && !found; ++side) {
            const double gx = g_init + (side == 0 ? h : -h);
            double fx;
            try {
                fx = f(gx);
            } catch (const DegeneracyError&) {
                continue;
            }
            if ((fx > 0.0) != (last_f[side] > 0.0)) {
                lo = std::min(gx, last_g[side]);
                hi = std::max(gx, last_g[side]);
                flo = (lo == gx) ? fx : last_f[side];
                fhi = (hi == gx) ? fx : last_f[side];
                found = true;
            }
            last_g[side] = gx;
            last_f[side] = fx;
        }
    }
    if (!found) {
        std::ostringstream os;
        os << "no sign change of the residual near g = " << g_init << " at a = " << a;
        throw NoSolutionError(os.str());
    }
    boost::uintmax_t iters = 200;
    auto tol = [&](double x, double y) { return std::abs(x - y) <= opt.tol_g; };
    const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
    return 0.5 * (r.first + r.second);
}

double beta_from(double a, double g, const IntSet& s, Evaluator ev, const QuadOptions& quad)
{
    const BranchPointSet bps = quotient_branch_points({a, g});
    const PairValues v = pair_values(bps, Linear::x(), ev, quad);
    const cplx w = cycle_integral(cycle_c(s), v) / 6.0;
    if (std::abs(w.imag()) > 1e-8 * std::max(1.0, std::abs(w))) {
        std::ostringstream os;
        os << "X dX/Y over the cycle is not real: " << w;
        throw ConventionError(os.str());
    }
    return w.real() * w.real() * w.real();
}

Unscaled unscale(double a, double g, double beta)
{
    if (beta == 0.0 || !std::isfinite(beta)) throw DomainError("unscale: beta must be finite and nonzero");
    return {a * std::pow(std::abs(beta), 2.0 / 3.0), g * beta};
}

SolutionPoint solve_point(double a, const IntSet& s, double g_init, const SolverOptions& opt,
                          double initial_step)
{
    SolutionPoint sp;
    sp.a = a;
    sp.intset = s;
    sp.g = solve_g(a, s, g_init, opt, initial_step);
    const PeriodData pd = period_matrix({a, sp.g}, opt.evaluator, opt.quad);
    sp.tau = pd.tau;
    const CycleExpr c = cycle_c(s);
    const cplx wx = cycle_integral(c, pd.JX) / 6.0;
    if (std::abs(wx.imag()) > 1e-8 * std::max(1.0, std::abs(wx)))
        throw ConventionError("X dX/Y over the cycle is not real");
    sp.beta = wx.real() * wx.real() * wx.real();

    const Residual r = es_residual_scaled(
        a, sp.g, s, opt.verify_with_oracle ? Evaluator::Oracle : opt.evaluator, opt.quad);
    sp.residual = r.value;
    sp.residual_scale = r.scale;
    if (std::abs(r.value) > opt.tol_residual * r.scale) {
        std::ostringstream os;
        os << "residual " << std::abs(r.value) << " above tolerance at (a,g) = (" << a << ", " << sp.g << ")";
        throw ConvergenceError(os.str());
    }
    return sp;
}

std::vector<double> sweep_grid(double a_from, double a_to, double step, double fine_from, double step_fine)
{
    if (!(step > 0.0)) throw DomainError("sweep step must be positive");
    const double dir = (a_to >= a_from) ? 1.0 : -1.0;
    const bool fine = step_fine > 0.0;
    std::vector<double> out;
    // integer counting keeps the grid free of accumulated drift
    const double eps = 1e-9;
    const double coarse_end = fine ? (dir > 0 ? std::min(a_to, fine_from) : std::max(a_to, fine_from)) : a_to;
    const long n1 = static_cast<long>(std::floor(std::abs(coarse_end - a_from) / step + eps));
    for (long i = 0; i <= n1; ++i) out.push_back(a_from + dir * step * double(i));
    if (fine) {
        const double start = out.back();
        const long n2 = static_cast<long>(std::floor(std::abs(a_to - start) / step_fine + eps));
        for (long i = 1; i <= n2; ++i) out.push_back(start + dir * step_fine * double(i));
    }
    for (double& x : out) x = std::round(x * 1e12) / 1e12;
    return out;
}

std::vector<double> geometric_grid(double a_from, double a_to, double ratio)
{
    if (!(ratio > 1.0) || a_from == 0.0 || a_from * a_to <= 0.0 || std::abs(a_to) < std::abs(a_from))
        throw DomainError("geometric grid needs ratio > 1 and |a_to| >= |a_from| of the same sign");
    std::vector<double> out{a_from};
    while (std::abs(out.back()) < std::abs(a_to)) out.push_back(out.back() * ratio);
    return out;
}

SweepResult continuation_sweep(const std::vector<double>& a_values, const IntSet& s, double g_seed,
                               const SolverOptions& opt)
{
    SweepResult res;
    double slope_est = 0.0;
    for (std::size_t i = 0; i < a_values.size(); ++i) {
        const double a = a_values[i];
        double g_pred = g_seed, step = 0.05;
        if (i >= 1) {
            const auto& p1 = res.points.back();
            g_pred = p1.g;
            if (res.points.size() >= 2) {
                const auto& p0 = res.points[res.points.size() - 2];
                slope_est = (p1.g - p0.g) / (p1.a - p0.a);
                g_pred = p1.g + slope_est * (a - p1.a);
            }
            step = std::max(1e-4, 0.25 * std::abs(slope_est * (a - p1.a)));
        }
        try {
            SolutionPoint sp = solve_point(a, s, g_pred, opt, step);
            if (res.points.size() >= 2) {
                const auto& p1 = res.points.back();
                const double jump = std::abs(sp.g - g_pred);
                const double local = std::abs(slope_est * (a - p1.a)) + 1e-6;
                if (jump > 10.0 * local) {
                    std::ostringstream os;
                    os << "continuation jumped from g = " << p1.g << " to " << sp.g << " at a = " << a;
                    res.stop_reason = os.str();
                    return res;
                }
            }
            res.points.push_back(sp);
        } catch (const std::runtime_error& e) {
            std::ostringstream os;
            os << "stopped at a = " << a << ": " << e.what();
            res.stop_reason = os.str();
            return res;
        }
    }
    return res;
}

double tetrahedral_seed(const IntSet& s)
{
    const double g0 = 5.0 * std::sqrt(2.0);
    return s == intset_minus ? -g0 : g0;
}

}  // namespace mono
