#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

namespace {

double nearest_root(const Poly& c, cplx x)
{
    double d = INFINITY;
    for (cplx r : c.roots) d = std::min(d, std::abs(x - r));
    return d;
}

cplx pick(cplx w, cplx prev) { return std::abs(w - prev) <= std::abs(w + prev) ? w : -w; }

// move (x, y) to z in steps of at most 5% of the distance to the nearest root
void walk(const Poly& c, cplx& x, cplx& y, cplx z)
{
    for (int guard = 0; x != z; ++guard) {
        if (guard > 2000000) throw std::runtime_error("oracle: tracking stalled near a root");
        const double h = 0.05 * nearest_root(c, x);
        const cplx dz = z - x;
        const cplx nx = std::abs(dz) <= h ? z : x + dz * (h / std::abs(dz));
        y = pick(std::sqrt(c.value(nx)), y);
        x = nx;
    }
}

}  // namespace

double Poly::anchor() const
{
    double right = -INFINITY, s = 1.0;
    for (cplx r : roots) {
        right = std::max(right, r.real());
        s = std::max(s, std::abs(r));
    }
    return right + s;
}

cplx Poly::value(cplx x) const
{
    cplx v{1.0};
    for (cplx r : roots) v *= x - r;
    return v;
}

cplx track(const Poly& c, const std::vector<cplx>& via, cplx to)
{
    cplx x = c.anchor();
    cplx y = std::sqrt(c.value(x));
    if (!(y.real() > 0.0)) y = -y;
    for (cplx v : via) walk(c, x, y, v);
    walk(c, x, y, to);
    return y;
}

cplx segment(const Poly& c, cplx p, cplx q, cplx s0, cplx s1, const std::vector<cplx>& via, int panels)
{
    using rule = boost::math::quadrature::gauss<double, 20>;
    // nodes in increasing theta on [0, pi]
    struct Node {
        double th, w;
    };
    std::vector<Node> nodes;
    const double h = M_PI / panels;
    for (int k = 0; k < panels; ++k) {
        const double mid = (k + 0.5) * h;
        const auto& xs = rule::abscissa();
        const auto& ws = rule::weights();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            nodes.push_back({mid + 0.5 * h * xs[i], 0.5 * h * ws[i]});
            if (xs[i] != 0.0) nodes.push_back({mid - 0.5 * h * xs[i], 0.5 * h * ws[i]});
        }
    }
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.th < b.th; });

    auto y_at = [&](double th) {
        const double sh = std::sin(0.5 * th), ch = std::cos(0.5 * th);
        const cplx x = p + (q - p) * sh * sh;
        cplx v = (q - p) * sh * sh * (p - q) * ch * ch;
        bool seen_p = false, seen_q = false;
        for (cplx r : c.roots) {
            if (!seen_p && r == p) {
                seen_p = true;
                continue;
            }
            if (!seen_q && r == q) {
                seen_q = true;
                continue;
            }
            v *= x - r;
        }
        if (!seen_p || !seen_q) throw std::invalid_argument("oracle::segment expects branch-point endpoints");
        return std::pair{x, std::sqrt(v)};
    };

    const cplx mid = 0.5 * (p + q);
    const cplx y_mid = track(c, via, mid);
    cplx total{};
    auto accumulate = [&](auto begin, auto end) {
        cplx x = mid, y = y_mid;
        for (auto it = begin; it != end; ++it) {
            const auto [xn, w] = y_at(it->th);
            walk(c, x, y, xn);
            y = pick(w, y);
            const double sh = std::sin(0.5 * it->th), ch = std::cos(0.5 * it->th);
            total += it->w * (s0 + s1 * xn) * (q - p) * sh * ch / y;
        }
    };
    const auto split = std::lower_bound(nodes.begin(), nodes.end(), M_PI / 2,
                                        [](const Node& n, double t) { return n.th < t; });
    accumulate(split, nodes.end());
    accumulate(std::make_reverse_iterator(split), nodes.rend());
    return total;
}

cplx real_axis_upper(const Poly& c, double p, double q, cplx s0, cplx s1)
{
    std::vector<double> pts{p};
    for (cplx r : c.roots)
        if (r.real() > std::min(p, q) && r.real() < std::max(p, q)) pts.push_back(r.real());
    pts.push_back(q);
    std::sort(pts.begin() + 1, pts.end() - 1);
    if (q < p) std::reverse(pts.begin() + 1, pts.end() - 1);

    double s = 1.0;
    for (cplx r : c.roots) s = std::max(s, std::abs(r));
    cplx total{};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double m = 0.5 * (pts[i] + pts[i + 1]);
        const std::vector<cplx> via{cplx(c.anchor(), s), cplx(m, s)};
        total += segment(c, pts[i], pts[i + 1], s0, s1, via);
    }
    return total;
}

double elliptic_direct(double a, double b)
{
    auto f = [&](double t) {
        const double co = std::cos(t), si = std::sin(t);
        return 1.0 / std::sqrt(a * a * co * co + b * b * si * si);
    };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, M_PI / 2, 15, 1e-15);
}

}  // namespace oracle
