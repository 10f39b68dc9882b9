#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "mono/agm_elliptic.hpp"
#include "mono/run_config.hpp"

using namespace mono;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

void print_c(const char* label, cplx z)
{
    std::printf("%s %.12f %+.12fi\n", label, z.real(), z.imag());
}

void print_char(const char* label, const Characteristic& c)
{
    std::printf("%-10s [%9.6f %9.6f ; %9.6f %9.6f]\n", label, c.alpha[0], c.alpha[1], c.beta[0], c.beta[1]);
}

int cmd_agm(double a, double b, const RunConfig& cfg)
{
    const AgmResult r = agm_run(a, b, cfg.tol_agm);
    std::printf("M(a,b)    %.15g\n", r.mean);
    std::printf("iterations %d\n", r.iterations);
    std::printf("K         %.15g\n", pi / (2.0 * r.mean));
    return 0;
}

bool write_file(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream out(p, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

int cmd_solve(const RunConfig& cfg)
{
    const SolveRun run = run_solve(cfg);
    std::filesystem::create_directories(cfg.out_dir);
    const std::filesystem::path dir(cfg.out_dir);
    std::ostringstream csv;
    write_solve_csv(csv, cfg, run);
    const std::string tag = "solve_" + format_intset(cfg.intset);
    if (!write_file(dir / (tag + ".csv"), csv.str()) ||
        !write_file(dir / (tag + ".json"), manifest_json(cfg, run))) {
        std::fprintf(stderr, "error: cannot write output in %s\n", cfg.out_dir.c_str());
        return exit_fail;
    }
    std::printf("%zu points written to %s\n", run.points.size(), (dir / (tag + ".csv")).c_str());
    for (const auto& note : run.stop_notes) {
        std::fprintf(stderr, "sweep ended early: %s\n", note.c_str());
    }
    if (!run.complete() && !run.points.empty()) {
        // points are stored in sweep order; the last of each branch is the last good one
        std::fprintf(stderr, "last point: a = %.12g, g = %.15g\n", run.points.back().a, run.points.back().g);
    }
    return run.complete() ? 0 : exit_fail;
}

int cmd_periods(double a, double g, bool involution, const RunConfig& cfg)
{
    QuadOptions q;
    q.rel_tol = cfg.tol_quad;
    const PeriodData pd = period_matrix({a, g}, Evaluator::Agm, q);
    for (int j = 1; j <= 6; ++j) {
        char label[8];
        std::snprintf(label, sizeof label, "B%d", j);
        print_c(label, pd.bps(j));
    }
    print_c("tau00", pd.tau[0][0]);
    print_c("tau01", pd.tau[0][1]);
    print_c("tau11", pd.tau[1][1]);
    std::printf("tau symmetric, Im tau positive definite\n");

    const AbelTable t = abel_characteristics(pd, q);
    for (int j = 0; j < 6; ++j) {
        char label[16];
        std::snprintf(label, sizeof label, "A(B%d)", j + 1);
        print_char(label, t.A_B1[j]);
    }
    print_char("K_B1", t.K_B1);
    print_char("A(inf+)", t.A_inf_B1);
    print_char("K_inf+", characteristic_of(riemann_constants_infinity(pd), pd.tau));
    const AbelCheck chk = check_abel(pd, t);
    const bool abel_ok = chk.worst() < 1e-6;
    std::printf("%s abel characteristics (worst deviation mod 1: %.2e)\n", abel_ok ? "PASS" : "FAIL",
                chk.worst());

    bool inv_ok = true;
    if (involution) {
        const InvolutionReport r = involution_matrix_checks();
        std::printf("%s M^2 = Id\n", r.square_is_identity ? "PASS" : "FAIL");
        std::printf("%s M J M^T = -J\n", r.antisymplectic ? "PASS" : "FAIL");
        std::printf("%s eigenvector relations\n", r.eigen_plus && r.eigen_minus ? "PASS" : "FAIL");
        inv_ok = r.all();
    }
    return abel_ok && inv_ok ? 0 : exit_fail;
}

int cmd_theta_scan(double a, const RunConfig& cfg)
{
    const SolutionPoint sp = solve_by_continuation(a, cfg);
    QuadOptions q;
    q.rel_tol = cfg.tol_quad;
    const PeriodData pd = period_matrix({sp.a, sp.g}, Evaluator::Agm, q);
    const auto scan = h3_scan(pd, cfg.intset, lambda_grid(cfg.grid), cfg.tol_theta);
    const H3Summary h = summarize(scan);

    std::filesystem::create_directories(cfg.out_dir);
    char name[64];
    for (int k = 0; k < 3; ++k) {
        std::snprintf(name, sizeof name, "theta_a%g_k%d.dat", a, k);
        std::ostringstream os;
        write_theta_columns(os, cfg, sp, scan, k);
        if (!write_file(std::filesystem::path(cfg.out_dir) / name, os.str())) {
            std::fprintf(stderr, "error: cannot write %s\n", name);
            return exit_fail;
        }
    }
    std::printf("a = %.12g  g = %.15g\n", sp.a, sp.g);
    for (int k = 0; k < 3; ++k)
        std::printf("k=%d interior min %.4e  |theta| at 0: %.3e  at 2: %.3e\n", k, h.interior_min[k],
                    h.at_start[k], h.at_end[k]);
    std::printf("lambda=0: %d of 3 vanishing\n", h.vanishing_start);
    std::printf("lambda=2: %d of 3 vanishing\n", h.vanishing_end);
    std::printf("interior margin %.3e\n", h.margin);
    std::printf("%s H3 nonvanishing\n", h.ok() ? "PASS" : "FAIL");
    return h.ok() ? 0 : exit_fail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cyclic charge-3 monopole spectral curves: periods, constraints and theta checks"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "flat key=value file; flags override it");
    // flags share their names with the config keys
    std::map<std::string, std::string> flags;
    for (const char* key : {"a-min", "a-max", "step", "step-fine", "fine-from", "intset", "tol-agm", "tol-quad",
                            "tol-residual", "tol-theta", "grid", "out-dir"})
        app.add_option(std::string("--") + key, flags[key]);

    auto* agm = app.add_subcommand("agm", "arithmetic-geometric mean and K = pi/(2M)");
    double agm_a = 0, agm_b = 0;
    agm->add_option("a", agm_a)->required();
    agm->add_option("b", agm_b)->required();

    app.add_subcommand("solve", "continuation sweep of the constraint locus");

    auto* periods = app.add_subcommand("periods", "branch points, period matrix and Abel characteristics");
    double pa = 0, pg = 0;
    bool check_involution = false;
    periods->add_option("a", pa)->required();
    periods->add_option("g", pg)->required();
    periods->add_flag("--check-involution", check_involution);

    auto* theta = app.add_subcommand("theta-scan", "H3 scan of the three theta factors along the flow");
    double theta_a = -12.3;
    theta->add_option("--a", theta_a, "parameter a of the solved curve")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    RunConfig cfg;
    try {
        if (!config_path.empty()) load_config_file(cfg, config_path);
        for (const auto& [key, value] : flags)
            if (app.count(std::string("--") + key) > 0) cfg.set(key, value);
        cfg.validate();
    } catch (const DomainError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return exit_usage;
    }

    try {
        if (*agm) return cmd_agm(agm_a, agm_b, cfg);
        if (*periods) return cmd_periods(pa, pg, check_involution, cfg);
        if (*theta) return cmd_theta_scan(theta_a, cfg);
        return cmd_solve(cfg);
    } catch (const DomainError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_fail;
    }
}
