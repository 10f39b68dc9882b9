#include "mono/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace mono {

namespace {

double parse_double(const std::string& key, const std::string& v)
{
    std::size_t used = 0;
    double x = 0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size() || !std::isfinite(x))
        throw DomainError("bad number for " + key + ": '" + v + "'");
    return x;
}

std::string fmt(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const char* sheet_anchor_text =
    "sheet 1: y > 0 at the real point right of all branch points by the largest root modulus";
const char* orientation_text =
    "B1..B3 in the lower half-plane by decreasing real part, B(7-j) = conj B(j); "
    "infinity+ is where Y/X^3 -> -1 on sheet 1";

}  // namespace

IntSet parse_intset(const std::string& text)
{
    std::array<int, 4> v{};
    std::stringstream ss(text);
    std::string item;
    int n = 0;
    while (std::getline(ss, item, ',')) {
        if (n == 4) throw DomainError("intset needs exactly four integers: '" + text + "'");
        item = trim(item);
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw DomainError("bad intset entry '" + item + "'");
        v[n++] = x;
    }
    if (n != 4) throw DomainError("intset needs exactly four integers: '" + text + "'");
    return {v[0], v[1], v[2], v[3]};
}

std::string format_intset(const IntSet& s)
{
    std::ostringstream os;
    os << s.n0 << ',' << s.n << ',' << s.m0 << ',' << s.m;
    return os.str();
}

void RunConfig::validate() const
{
    auto need = [](bool ok, const char* what) {
        if (!ok) throw DomainError(std::string("invalid configuration: ") + what);
    };
    need(a_min <= 0.0 && a_max >= 0.0, "the sweep must contain the seed a = 0 (a-min <= 0 <= a-max)");
    need(step > 0.0 && step_fine > 0.0, "steps must be positive");
    need(tol_agm > 0.0 && tol_quad > 0.0 && tol_residual > 0.0 && tol_theta > 0.0,
         "tolerances must be positive");
    need(tol_residual >= 10.0 * tol_quad, "tol-residual must be at least 10x tol-quad");
    need(grid >= 1, "grid must be at least 1");
    need(!out_dir.empty(), "out-dir must not be empty");
}

void RunConfig::set(const std::string& key, const std::string& value)
{
    if (key == "a-min") a_min = parse_double(key, value);
    else if (key == "a-max") a_max = parse_double(key, value);
    else if (key == "step") step = parse_double(key, value);
    else if (key == "step-fine") step_fine = parse_double(key, value);
    else if (key == "fine-from") fine_from = parse_double(key, value);
    else if (key == "intset") intset = parse_intset(value);
    else if (key == "tol-agm") tol_agm = parse_double(key, value);
    else if (key == "tol-quad") tol_quad = parse_double(key, value);
    else if (key == "tol-residual") tol_residual = parse_double(key, value);
    else if (key == "tol-theta") tol_theta = parse_double(key, value);
    else if (key == "grid") {
        const double g = parse_double(key, value);
        if (g != std::floor(g) || g < 1 || g > 1e7) throw DomainError("grid must be a positive integer");
        grid = static_cast<int>(g);
    } else if (key == "out-dir") out_dir = value;
    else throw DomainError("unknown configuration key '" + key + "'");
}

SolverOptions RunConfig::solver_options() const
{
    SolverOptions o;
    o.tol_residual = tol_residual;
    o.quad.rel_tol = tol_quad;
    return o;
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const
{
    return {{"a-min", fmt(a_min)},       {"a-max", fmt(a_max)},
            {"step", fmt(step)},         {"step-fine", fmt(step_fine)},
            {"fine-from", fmt(fine_from)}, {"intset", format_intset(intset)},
            {"tol-agm", fmt(tol_agm)},   {"tol-quad", fmt(tol_quad)},
            {"tol-residual", fmt(tol_residual)}, {"tol-theta", fmt(tol_theta)},
            {"grid", std::to_string(grid)}, {"out-dir", out_dir}};
}

void load_config(RunConfig& cfg, std::istream& in)
{
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
        cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

void load_config_file(RunConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file " + path);
    load_config(cfg, in);
}

SolveRun run_solve(const RunConfig& cfg)
{
    cfg.validate();
    const SolverOptions opt = cfg.solver_options();
    const double g0 = tetrahedral_seed(cfg.intset);
    SolveRun run;

    const auto up = continuation_sweep(sweep_grid(0.0, cfg.a_max, cfg.step, cfg.fine_from, cfg.step_fine),
                                       cfg.intset, g0, opt);
    run.points = up.points;
    if (up.stop_reason) run.stop_notes.push_back(*up.stop_reason);
    if (up.points.empty()) return run;

    if (cfg.a_min < 0.0) {
        const auto down = continuation_sweep(sweep_grid(0.0, cfg.a_min, cfg.step), cfg.intset, g0, opt);
        for (std::size_t i = 1; i < down.points.size(); ++i) run.points.push_back(down.points[i]);
        if (down.stop_reason) run.stop_notes.push_back(*down.stop_reason);
    }
    return run;
}

void write_solve_csv(std::ostream& out, const RunConfig& cfg, const SolveRun& run)
{
    for (const auto& [k, v] : cfg.entries()) out << "# " << k << '=' << v << '\n';
    out << "# " << sheet_anchor_text << '\n' << "# " << orientation_text << '\n';
    out << "a,g,beta,alpha,gamma,residual_abs\n";
    char buf[256];
    for (const auto& p : run.points) {
        const Unscaled u = unscale(p.a, p.g, p.beta);
        std::snprintf(buf, sizeof buf, "%.12g,%.15g,%.15g,%.15g,%.15g,%.3e\n", p.a, p.g, p.beta, u.alpha,
                      u.gamma, std::abs(p.residual));
        out << buf;
    }
}

std::string manifest_json(const RunConfig& cfg, const SolveRun& run)
{
    nlohmann::json j;
    nlohmann::json c = nlohmann::json::object();
    for (const auto& [k, v] : cfg.entries()) c[k] = v;
    j["config"] = c;
    if (!run.points.empty()) {
        const auto& p = run.points.front();
        j["seed_point"] = {{"a", p.a}, {"g", p.g}, {"beta", p.beta}};
    } else {
        j["seed_point"] = nullptr;
    }
    const IntSet& s = cfg.intset;
    j["intset"] = {s.n0, s.n, s.m0, s.m};
    j["conventions"] = {{"sheet_anchor", sheet_anchor_text}, {"orientation", orientation_text}};
    j["tool_version"] = tool_version;
    j["points"] = run.points.size();
    j["stop_notes"] = run.stop_notes;
    return j.dump(2) + "\n";
}

SolutionPoint solve_by_continuation(double a, const RunConfig& cfg)
{
    const SolverOptions opt = cfg.solver_options();
    const double g0 = tetrahedral_seed(cfg.intset);
    if (a == 0.0) return solve_point(0.0, cfg.intset, g0, opt);
    const auto r = continuation_sweep(sweep_grid(0.0, a, cfg.step), cfg.intset, g0, opt);
    if (r.stop_reason) throw NoSolutionError(*r.stop_reason);
    // the grid may stop short of a by less than one step
    if (r.points.back().a != a) {
        const auto& p1 = r.points.back();
        double g = p1.g;
        if (r.points.size() >= 2) {
            const auto& p0 = r.points[r.points.size() - 2];
            g += (p1.g - p0.g) / (p1.a - p0.a) * (a - p1.a);
        }
        return solve_point(a, cfg.intset, g, opt, std::max(1e-4, 0.25 * std::abs(g - p1.g)));
    }
    return r.points.back();
}

void write_theta_columns(std::ostream& out, const RunConfig& cfg, const SolutionPoint& sp,
                         const std::vector<FlowPoint>& scan, int k)
{
    for (const auto& [key, v] : cfg.entries()) out << "# " << key << '=' << v << '\n';
    out << "# " << sheet_anchor_text << '\n' << "# " << orientation_text << '\n';
    char buf[256];
    std::snprintf(buf, sizeof buf, "# a=%.12g g=%.15g k=%d characteristic [(0,0);(%d/3,0)]\n", sp.a, sp.g, k, k);
    out << buf << "# lambda re im abs\n";
    for (const auto& fp : scan) {
        const cplx v = fp.values[k];
        std::snprintf(buf, sizeof buf, "%.6f %.12e %.12e %.12e\n", fp.lambda, v.real(), v.imag(), std::abs(v));
        out << buf;
    }
}

}  // namespace mono
