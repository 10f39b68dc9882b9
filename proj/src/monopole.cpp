#include "mono/monopole.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace mono {

namespace {

const cplx rho{-0.5, std::sqrt(3.0) / 2.0};

std::array<cplx, 3> depressed_cubic_roots(double a, cplx c)
{
    Eigen::Matrix3cd comp = Eigen::Matrix3cd::Zero();
    comp(1, 0) = 1.0;
    comp(2, 1) = 1.0;
    comp(0, 2) = -c;
    comp(1, 2) = -a;
    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(comp, false);
    std::array<cplx, 3> r;
    for (int i = 0; i < 3; ++i) {
        cplx x = es.eigenvalues()(i);
        for (int it = 0; it < 3; ++it) {
            const cplx f = x * x * x + a * x + c, df = 3.0 * x * x + a;
            if (df == cplx{}) break;
            x -= f / df;
        }
        r[i] = x;
    }
    return r;
}

// coefficient vectors over (a0, a1, b0, b1) read as Pair -> coefficient
struct BasisExpansion {
    std::map<Pair, long> a0, a1, b0, b1;
};

// Basis cycles as combinations of J over the pair labels. They come from the
// hexagon edge cycles L_i = 2 J(B_i -> B_{i+1}):
//   b0 = L3 - L4, b1 = L1 + L3 - L4, a1 = -L1 + L2 + L4, a0 = L1 - L2 + 2 L3 - 2 L4
// with J(B3->B4) = -J(a,a'), J(B4->B5) = J(a,b), J(B1->B2) = -J(b',c'),
// J(B2->B3) = -J(a',b').
const BasisExpansion& basis_expansion()
{
    static const BasisExpansion e{
        {{Pair::AA, -4}, {Pair::AB, -4}, {Pair::ApBp, 2}, {Pair::BpCp, -2}},
        {{Pair::AB, 2}, {Pair::ApBp, -2}, {Pair::BpCp, 2}},
        {{Pair::AA, -2}, {Pair::AB, -2}},
        {{Pair::AA, -2}, {Pair::AB, -2}, {Pair::BpCp, -2}},
    };
    return e;
}

// B-label endpoints of each pair label.
std::pair<int, int> pair_endpoints(Pair p)
{
    switch (p) {
    case Pair::AA: return {4, 3};
    case Pair::BB: return {5, 2};
    case Pair::CC: return {6, 1};
    case Pair::AB: return {4, 5};
    case Pair::ApBp: return {3, 2};
    case Pair::BC: return {5, 6};
    case Pair::BpCp: return {2, 1};
    }
    return {0, 0};
}

Mat2 inverse(const Mat2& m)
{
    const cplx det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (std::abs(det) < 1e-300) throw ConventionError("singular a-period matrix");
    return {{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

Mat2 mul(const Mat2& x, const Mat2& y)
{
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

double frac_dist(double x)
{
    return std::abs(x - std::round(x));
}

}  // namespace

BranchPointSet quotient_branch_points(const CurveParams& p)
{
    if (!std::isfinite(p.a) || !std::isfinite(p.g)) throw DomainError("non-finite curve parameters");
    const auto up = depressed_cubic_roots(p.a, cplx(p.g, -2.0));
    const auto dn = depressed_cubic_roots(p.a, cplx(p.g, 2.0));
    std::vector<cplx> all(up.begin(), up.end());
    all.insert(all.end(), dn.begin(), dn.end());

    double scale = 1.0;
    for (cplx z : all) scale = std::max(scale, std::abs(z));
    std::size_t ci = 0, cj = 1;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (std::abs(all[i] - all[j]) < std::abs(all[ci] - all[cj])) ci = i, cj = j;
    // a double root only separates to ~sqrt(eps) numerically, so also look at
    // the discriminant 4a^3 + 27q^2 of each cubic
    bool double_root = false;
    for (double sgn : {-1.0, 1.0}) {
        const cplx q(p.g, 2.0 * sgn);
        const double a3 = 4.0 * p.a * p.a * p.a;
        const cplx q2 = 27.0 * q * q;
        if (std::abs(a3 + q2) <= 1e-14 * (std::abs(a3) + std::abs(q2))) double_root = true;
    }
    if (double_root || std::abs(all[ci] - all[cj]) < degeneracy_threshold * scale) {
        std::ostringstream os;
        os.precision(12);
        os << "degenerate curve at (a,g) = (" << p.a << ", " << p.g << "): branch points " << all[ci]
           << " and " << all[cj] << " collide";
        throw DegeneracyError(os.str());
    }

    std::vector<cplx> lower;
    for (cplx z : all)
        if (z.imag() < 0.0) lower.push_back(z);
    if (lower.size() != 3) throw ConventionError("branch points are not in conjugate pairs");
    std::sort(lower.begin(), lower.end(), [](cplx x, cplx y) { return x.real() > y.real(); });
    BranchPointSet s;
    for (int i = 0; i < 3; ++i) {
        s.B[i] = lower[i];
        s.B[5 - i] = std::conj(lower[i]);
    }
    return s;
}

std::array<cplx, 6> closed_form_branch_points(const CurveParams& p)
{
    std::array<cplx, 6> out;
    int k = 0;
    for (double sgn : {-1.0, 1.0}) {
        const cplx q(p.g, 2.0 * sgn);
        const cplx disc = std::sqrt(q * q / 4.0 + p.a * p.a * p.a / 27.0);
        // the larger of the two Cardano radicands keeps 1/C well conditioned
        const cplx r1 = -q / 2.0 + disc, r2 = -q / 2.0 - disc;
        const cplx C = std::pow(std::abs(r1) >= std::abs(r2) ? r1 : r2, 1.0 / 3.0);
        cplx w{1.0};
        for (int j = 0; j < 3; ++j, w *= rho) {
            const cplx Cw = C * w;
            out[k++] = (Cw == cplx{}) ? cplx{} : Cw - p.a / (3.0 * Cw);
        }
    }
    return out;
}

std::array<cplx, 12> genus4_branch_points(double alpha, double beta, double gamma)
{
    if (beta == 0.0) throw DomainError("genus4_branch_points: beta must be nonzero");
    // the discriminant in eta vanishes where beta w^2 + (gamma -+ 2i s/sqrt 27) w - beta = 0,
    // w = zeta^3, s^2 = alpha^3
    const cplx s = std::sqrt(cplx(alpha * alpha * alpha));
    std::array<cplx, 4> w;
    int k = 0;
    for (double sgn : {1.0, -1.0}) {
        const cplx b = gamma - sgn * 2.0 * I_unit * s / std::sqrt(27.0);
        const cplx d = std::sqrt(b * b + 4.0 * beta * beta);
        w[k++] = (-b + d) / (2.0 * beta);
        w[k++] = (-b - d) / (2.0 * beta);
    }
    std::array<cplx, 12> out;
    for (int j = 0; j < 4; ++j) {
        const cplx z = std::pow(w[j], 1.0 / 3.0);
        out[j] = z;
        out[j + 4] = rho * z;
        out[j + 8] = rho * rho * z;
    }
    return out;
}

CycleExpr cycle_c(const IntSet& s)
{
    return {s.n0, 3L * s.m0, 3L * s.n, 3L * s.m};
}

std::vector<PairTerm> cycle_to_pairs(const CycleExpr& e)
{
    const auto& be = basis_expansion();
    std::map<Pair, long> acc;
    auto add = [&](const std::map<Pair, long>& m, long c) {
        for (auto [p, k] : m) acc[p] += c * k;
    };
    add(be.a0, e.a0);
    add(be.a1, e.a1);
    add(be.b0, e.b0);
    add(be.b1, e.b1);
    std::vector<PairTerm> out;
    for (auto [p, k] : acc)
        if (k != 0) out.push_back({k, p});
    return out;
}

cplx edge_integral(const BranchPointSet& bps, int j, int k, const Linear& S, const QuadOptions& opt)
{
    cplx centroid{};
    for (cplx z : bps.B) centroid += z;
    centroid /= 6.0;
    // continuation enters the hexagon across the edge B6-B1, which is not a cut
    SheetedContour path{{bps(j), bps(k)}, 1, {cplx(centroid.real(), 0.0)}};
    return line_integral(bps.curve(), path, S, opt);
}

PairValues pair_values(const BranchPointSet& bps, const Linear& S, Evaluator ev, const QuadOptions& opt)
{
    PairValues v;
    if (ev == Evaluator::Agm) {
        try {
            const PairIntegralTable t = integrals_conjugate(bps.model(), S);
            for (Pair p : all_pairs) v.J[static_cast<int>(p)] = -I_unit * t[p];
            return v;
        } catch (const DegeneracyError&) {
            // the first Richelot step degenerates on the symmetric a = 0 curves
            v.fallback = true;
        }
    }
    for (Pair p : all_pairs) {
        const auto [j, k] = pair_endpoints(p);
        v.J[static_cast<int>(p)] = edge_integral(bps, j, k, S, opt);
    }
    return v;
}

cplx cycle_integral(const CycleExpr& e, const PairValues& v)
{
    cplx s{};
    for (auto [k, p] : cycle_to_pairs(e)) s += double(k) * v[p];
    return s;
}

cplx basis_cycle_direct(const BranchPointSet& bps, const CycleExpr& e, const Linear& S,
                        const QuadOptions& opt)
{
    std::array<cplx, 7> L{};
    for (int i = 1; i <= 4; ++i) L[i] = 2.0 * edge_integral(bps, i, i + 1, S, opt);
    const cplx a0 = L[1] - L[2] + 2.0 * L[3] - 2.0 * L[4];
    const cplx a1 = -L[1] + L[2] + L[4];
    const cplx b0 = L[3] - L[4];
    const cplx b1 = L[1] + L[3] - L[4];
    return double(e.a0) * a0 + double(e.a1) * a1 + double(e.b0) * b0 + double(e.b1) * b1;
}

PeriodData period_matrix(const CurveParams& p, Evaluator ev, const QuadOptions& opt)
{
    PeriodData pd;
    pd.bps = quotient_branch_points(p);
    pd.J1 = pair_values(pd.bps, Linear::one(), ev, opt);
    pd.JX = pair_values(pd.bps, Linear::x(), ev, opt);
    const CycleExpr ca0{1, 0, 0, 0}, ca1{0, 0, 1, 0}, cb0{0, 1, 0, 0}, cb1{0, 0, 0, 1};
    pd.A = {{{cycle_integral(ca0, pd.J1), cycle_integral(ca0, pd.JX)},
             {cycle_integral(ca1, pd.J1), cycle_integral(ca1, pd.JX)}}};
    pd.B = {{{cycle_integral(cb0, pd.J1), cycle_integral(cb0, pd.JX)},
             {cycle_integral(cb1, pd.J1), cycle_integral(cb1, pd.JX)}}};
    pd.tau = mul(pd.B, inverse(pd.A));

    const double sc = std::max({std::abs(pd.tau[0][0]), std::abs(pd.tau[1][1]), 1.0});
    if (std::abs(pd.tau[0][1] - pd.tau[1][0]) > 1e-9 * sc)
        throw ConventionError("period matrix is not symmetric");
    const double t00 = pd.tau[0][0].imag(), t11 = pd.tau[1][1].imag();
    const double t01 = 0.5 * (pd.tau[0][1].imag() + pd.tau[1][0].imag());
    if (!(t00 > 0.0 && t00 * t11 - t01 * t01 > 0.0))
        throw ConventionError("imaginary part of the period matrix is not positive definite");
    // symmetrize away the roundoff
    const cplx off = 0.5 * (pd.tau[0][1] + pd.tau[1][0]);
    pd.tau[0][1] = pd.tau[1][0] = off;
    return pd;
}

std::array<cplx, 2> normalize(const std::array<cplx, 2>& zu, const PeriodData& pd)
{
    const Mat2 Ai = inverse(pd.A);
    return {zu[0] * Ai[0][0] + zu[1] * Ai[1][0], zu[0] * Ai[0][1] + zu[1] * Ai[1][1]};
}

Characteristic characteristic_of(const std::array<cplx, 2>& z, const Mat2& tau)
{
    const double y00 = tau[0][0].imag(), y01 = tau[0][1].imag(), y11 = tau[1][1].imag();
    const double det = y00 * y11 - y01 * y01;
    const double im0 = z[0].imag(), im1 = z[1].imag();
    Characteristic c;
    c.alpha = {(im0 * y11 - im1 * y01) / det, (-im0 * y01 + im1 * y00) / det};
    c.beta = {z[0].real() - c.alpha[0] * tau[0][0].real() - c.alpha[1] * tau[1][0].real(),
              z[1].real() - c.alpha[0] * tau[0][1].real() - c.alpha[1] * tau[1][1].real()};
    return c;
}

double char_distance_mod1(const Characteristic& x, const Characteristic& y)
{
    double d = 0.0;
    for (int i = 0; i < 2; ++i) {
        d = std::max(d, frac_dist(x.alpha[i] - y.alpha[i]));
        d = std::max(d, frac_dist(x.beta[i] - y.beta[i]));
    }
    return d;
}

AbelTable abel_characteristics(const PeriodData& pd, const QuadOptions& opt)
{
    AbelTable t;
    std::array<cplx, 2> acc{};
    std::array<std::array<cplx, 2>, 6> z{};
    for (int j = 1; j <= 6; ++j) {
        z[j - 1] = acc;
        if (j < 6) {
            acc[0] += edge_integral(pd.bps, j, j + 1, Linear::one(), opt);
            acc[1] += edge_integral(pd.bps, j, j + 1, Linear::x(), opt);
        }
    }
    for (int j = 0; j < 6; ++j) t.A_B1[j] = characteristic_of(normalize(z[j], pd), pd.tau);
    const std::array<cplx, 2> kb = {-(z[4][0] + z[5][0]), -(z[4][1] + z[5][1])};
    t.K_B1 = characteristic_of(normalize(kb, pd), pd.tau);

    const Curve c = pd.bps.curve();
    const std::array<cplx, 2> zi = {infinity_integral(c, Linear::one(), pd.bps(1), infinity_plus_sign, {}, opt),
                                    infinity_integral(c, Linear::x(), pd.bps(1), infinity_plus_sign, {}, opt)};
    t.A_inf_B1 = characteristic_of(normalize(zi, pd), pd.tau);
    return t;
}

const std::array<Characteristic, 6>& expected_abel_table()
{
    static const std::array<Characteristic, 6> t = {{
        {{0.0, 0.0}, {0.0, 0.0}},
        {{0.5, 0.5}, {0.0, 0.0}},
        {{0.0, 0.0}, {0.5, 0.0}},
        {{0.5, 0.0}, {0.0, 0.5}},
        {{0.5, 0.0}, {0.5, 0.0}},
        {{0.5, 0.5}, {0.0, 0.5}},
    }};
    return t;
}

Characteristic expected_K_B1() { return {{0.0, 0.5}, {0.5, 0.5}}; }
Characteristic expected_A_inf_B1() { return {{0.5, 0.0}, {2.0 / 3.0, 0.0}}; }
Characteristic expected_K_inf() { return {{0.5, 0.5}, {1.0 / 6.0, 0.5}}; }

std::array<cplx, 2> riemann_constants_infinity(const PeriodData& pd)
{
    const auto& t = pd.tau;
    return {0.5 * (t[0][0] + t[1][0]) + 1.0 / 6.0, 0.5 * (t[0][1] + t[1][1]) + 0.5};
}

AbelCheck check_abel(const PeriodData& pd, const AbelTable& t)
{
    AbelCheck c;
    for (int j = 0; j < 6; ++j)
        c.table = std::max(c.table, char_distance_mod1(t.A_B1[j], expected_abel_table()[j]));
    c.K_B1 = char_distance_mod1(t.K_B1, expected_K_B1());
    c.A_inf_B1 = char_distance_mod1(t.A_inf_B1, expected_A_inf_B1());
    Characteristic sum;
    for (int i = 0; i < 2; ++i) {
        sum.alpha[i] = t.A_inf_B1.alpha[i] + t.K_B1.alpha[i];
        sum.beta[i] = t.A_inf_B1.beta[i] + t.K_B1.beta[i];
    }
    c.K_inf_identity = char_distance_mod1(characteristic_of(riemann_constants_infinity(pd), pd.tau), sum);
    return c;
}

const IMat4& involution_matrix()
{
    static const IMat4 M = {{{2, 0, 0, -3}, {1, 2, -3, 2}, {2, 1, -2, -1}, {1, 0, 0, -2}}};
    return M;
}

InvolutionReport involution_matrix_checks()
{
    const IMat4& M = involution_matrix();
    auto mm = [](const IMat4& x, const IMat4& y) {
        IMat4 r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) r[i][j] += x[i][k] * y[k][j];
        return r;
    };
    auto transpose = [](const IMat4& x) {
        IMat4 r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r[i][j] = x[j][i];
        return r;
    };
    const IMat4 id = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    const IMat4 J = {{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}};
    IMat4 minusJ = J;
    for (auto& row : minusJ)
        for (auto& x : row) x = -x;

    auto anti_fixed = [&](std::array<long, 4> v) {
        for (int j = 0; j < 4; ++j) {
            long s = 0;
            for (int k = 0; k < 4; ++k) s += v[k] * M[k][j];
            if (s != -v[j]) return false;
        }
        return true;
    };

    InvolutionReport r;
    r.square_is_identity = mm(M, M) == id;
    r.antisymplectic = mm(mm(M, J), transpose(M)) == minusJ;
    r.eigen_plus = anti_fixed({4, 3, -9, 3});
    r.eigen_minus = anti_fixed({5, 3, -9, 0});
    return r;
}

}  // namespace mono
