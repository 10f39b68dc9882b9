#include "mono/theta.hpp"

#include <algorithm>
#include <cmath>

namespace mono {

namespace {

struct ImagPart {
    double y00, y01, y11;
    double lambda_min() const
    {
        const double tr = 0.5 * (y00 + y11), d = std::hypot(0.5 * (y00 - y11), y01);
        return tr - d;
    }
};

ImagPart imag_part(const Mat2& tau)
{
    return {tau[0][0].imag(), 0.5 * (tau[0][1].imag() + tau[1][0].imag()), tau[1][1].imag()};
}

}  // namespace

double theta_radius(const Mat2& tau, double tol)
{
    const double lm = imag_part(tau).lambda_min();
    if (!(lm > 0.0)) throw DomainError("theta2: imaginary part of tau is not positive definite");
    // exp(-pi lm R^2) < tol
    return std::sqrt(-std::log(tol) / (pi * lm));
}

cplx theta2(const Vec2& z, const Mat2& tau, const ThetaChar& ch, double tol)
{
    const ImagPart Y = imag_part(tau);
    const double R = theta_radius(tau, tol);
    const double t01 = 0.5 * (tau[0][1] + tau[1][0]).real();
    const cplx t00 = tau[0][0], t11 = tau[1][1];
    const cplx tsym = cplx(t01, Y.y01);
    const cplx w0 = z[0] + ch.beta[0], w1 = z[1] + ch.beta[1];

    // the modulus of a term peaks at m = n + alpha = -Y^-1 Im w
    const double det = Y.y00 * Y.y11 - Y.y01 * Y.y01;
    const double c0 = -(Y.y11 * w0.imag() - Y.y01 * w1.imag()) / det;
    const double c1 = -(-Y.y01 * w0.imag() + Y.y00 * w1.imag()) / det;
    auto exponent = [&](double m0, double m1) {
        return I_unit * pi * (m0 * m0 * t00 + 2.0 * m0 * m1 * tsym + m1 * m1 * t11) +
               2.0 * pi * I_unit * (m0 * w0 + m1 * w1);
    };
    // factor the peak out so that large Im z does not overflow
    const cplx peak = exponent(c0, c1);

    const long lo0 = static_cast<long>(std::floor(c0 - ch.alpha[0] - R)) - 1;
    const long hi0 = static_cast<long>(std::ceil(c0 - ch.alpha[0] + R)) + 1;
    const long lo1 = static_cast<long>(std::floor(c1 - ch.alpha[1] - R)) - 1;
    const long hi1 = static_cast<long>(std::ceil(c1 - ch.alpha[1] + R)) + 1;
    cplx sum{};
    for (long n0 = lo0; n0 <= hi0; ++n0) {
        const double m0 = double(n0) + ch.alpha[0];
        for (long n1 = lo1; n1 <= hi1; ++n1) {
            const double m1 = double(n1) + ch.alpha[1];
            const double d0 = m0 - c0, d1 = m1 - c1;
            if (d0 * d0 + d1 * d1 > R * R) continue;
            sum += std::exp(exponent(m0, m1) - peak.real());
        }
    }
    return sum * std::exp(peak.real());
}

Vec2 es_vector(const IntSet& s, const Mat2& tau)
{
    const double m0 = double(s.m0), m = double(s.m);
    return {0.5 * double(s.n0) / 3.0 + 0.5 * (m0 * tau[0][0] + m * tau[1][0]),
            0.5 * double(s.n) + 0.5 * (m0 * tau[0][1] + m * tau[1][1])};
}

std::vector<double> lambda_grid(int n)
{
    if (n < 1) throw DomainError("lambda grid needs at least one interval");
    std::vector<double> out(n + 1);
    for (int i = 0; i <= n; ++i) out[i] = 2.0 * double(i) / double(n);
    return out;
}

std::vector<FlowPoint> h3_scan(const PeriodData& pd, const IntSet& s, const std::vector<double>& lambdas,
                               double tol)
{
    const Vec2 U = es_vector(s, pd.tau);
    const Vec2 K = riemann_constants_infinity(pd);
    std::vector<FlowPoint> out;
    out.reserve(lambdas.size());
    for (double lam : lambdas) {
        FlowPoint fp;
        fp.lambda = lam;
        fp.z = {lam * U[0] - K[0] + 1.0 / 3.0, lam * U[1] - K[1]};
        for (int k = 0; k < 3; ++k) {
            ThetaChar ch;
            ch.beta = {double(k) / 3.0, 0.0};
            fp.values[k] = theta2(fp.z, pd.tau, ch, tol);
        }
        out.push_back(fp);
    }
    return out;
}

bool H3Summary::ok() const
{
    return vanishing_start == 2 && vanishing_end == 2 && margin > 1e3;
}

H3Summary summarize(const std::vector<FlowPoint>& scan)
{
    H3Summary h;
    if (scan.empty()) return h;
    std::array<std::vector<double>, 3> inner;
    for (const auto& fp : scan)
        if (fp.lambda >= h3_interior_lo - 1e-12 && fp.lambda <= h3_interior_hi + 1e-12)
            for (int k = 0; k < 3; ++k) inner[k].push_back(std::abs(fp.values[k]));
    const FlowPoint& first = scan.front();
    const FlowPoint& last = scan.back();
    double min_inner = INFINITY, max_vanishing = 0.0;
    for (int k = 0; k < 3; ++k) {
        auto& v = inner[k];
        if (v.empty()) throw DomainError("lambda grid has no interior points");
        h.interior_min[k] = *std::min_element(v.begin(), v.end());
        std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
        h.interior_median[k] = v[v.size() / 2];
        h.at_start[k] = std::abs(first.values[k]);
        h.at_end[k] = std::abs(last.values[k]);
        const double thr = h3_vanish_rel * h.interior_median[k];
        if (h.at_start[k] < thr) {
            ++h.vanishing_start;
            max_vanishing = std::max(max_vanishing, h.at_start[k]);
        }
        if (h.at_end[k] < thr) {
            ++h.vanishing_end;
            max_vanishing = std::max(max_vanishing, h.at_end[k]);
        }
        min_inner = std::min(min_inner, h.interior_min[k]);
    }
    h.margin = max_vanishing > 0.0 ? min_inner / max_vanishing : INFINITY;
    return h;
}

}  // namespace mono
