#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mono/es_solver.hpp"
#include "mono/theta.hpp"

namespace mono {

inline constexpr const char* tool_version = "0.3.0";

struct RunConfig {
    double a_min = -15.0, a_max = 2.99;
    double step = 0.1, step_fine = 0.01, fine_from = 2.8;
    IntSet intset = intset_plus;
    double tol_agm = 1e-15;
    double tol_quad = 1e-11;
    double tol_residual = 1e-8;
    double tol_theta = 1e-12;
    int grid = 400;
    std::string out_dir = ".";

    // throws DomainError listing the first violated constraint
    void validate() const;

    // Set one field from its flag name without dashes (a-min, tol-quad, ...).
    void set(const std::string& key, const std::string& value);

    SolverOptions solver_options() const;

    // key=value lines in a fixed order, parseable by load_config
    std::vector<std::pair<std::string, std::string>> entries() const;
};

IntSet parse_intset(const std::string& text);
std::string format_intset(const IntSet& s);

// Flat key=value file; blank lines and '#' comments ignored.
void load_config(RunConfig& cfg, std::istream& in);
void load_config_file(RunConfig& cfg, const std::string& path);

struct SolveRun {
    std::vector<SolutionPoint> points;   // seed first, then a > 0, then a < 0
    std::vector<std::string> stop_notes; // one per sweep that ended early
    bool complete() const { return stop_notes.empty(); }
};

// Seed at the tetrahedral point and sweep to a_max and down to a_min.
SolveRun run_solve(const RunConfig& cfg);

void write_solve_csv(std::ostream& out, const RunConfig& cfg, const SolveRun& run);
std::string manifest_json(const RunConfig& cfg, const SolveRun& run);

// Solution at a, reached by continuation from the tetrahedral seed.
SolutionPoint solve_by_continuation(double a, const RunConfig& cfg);

void write_theta_columns(std::ostream& out, const RunConfig& cfg, const SolutionPoint& sp,
                         const std::vector<FlowPoint>& scan, int k);

}  // namespace mono
