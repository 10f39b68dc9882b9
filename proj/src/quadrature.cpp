#include "mono/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>

namespace mono {

namespace {

// Kronrod 15-point nodes on [-1,1] (non-negative half) with Kronrod and
// embedded Gauss 7-point weights.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo, hi;
    cplx value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const std::function<cplx(double)>& f, double lo, double hi)
{
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    const cplx fc = f(c);
    cplx k = fc * wgk[7];
    cplx g = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const cplx s = f(c - dx) + f(c + dx);
        k += wgk[j] * s;
        if (j % 2 == 1) g += wg[j / 2] * s;
    }
    return {lo, hi, k * h, std::abs((k - g) * h)};
}

// y restricted to a segment p -> q (or a ray when `ray` is set), written as a
// product of square roots whose cuts all point away from the path so that the
// product is analytic along it. The overall sign is fixed separately.
class PathBranch {
public:
    PathBranch(const Curve& c, cplx p, cplx q, double clearance, bool ray = false)
    {
        const double tiny = 1e-14 * c.scale();
        const cplx dir = (q - p) / std::abs(q - p);
        cplx pref = std::sqrt(c.lead);
        for (cplx r : c.roots) {
            if (std::abs(r - p) <= tiny) {
                at_p_ += 1;
                pref *= std::sqrt(q - p);
                continue;
            }
            if (!ray && std::abs(r - q) <= tiny) {
                at_q_ += 1;
                pref *= std::sqrt(p - q);
                continue;
            }
            // nearest point of the path to r
            double t = std::real((r - p) * std::conj(dir));
            t = ray ? std::max(t, 0.0) : std::clamp(t, 0.0, std::abs(q - p));
            const cplx foot = p + t * dir;
            const double dist = std::abs(foot - r);
            if (dist < clearance) {
                std::ostringstream os;
                os.precision(12);
                os << "path " << p << " -> " << q << " passes within " << dist
                   << " of branch point " << r;
                throw DegeneracyError(os.str());
            }
            const cplx d = (foot - r) / dist;
            others_.push_back({r, d});
            pref *= std::sqrt(d);
        }
        prefactor_ = pref;
    }

    // Unsigned y at x, given exact half-angle data for the endpoints:
    // sp = sqrt((x - p)/(q - p)), sq = sqrt((x - q)/(p - q)) (segments).
    cplx eval(cplx x, double sp, double sq) const
    {
        cplx v = prefactor_;
        for (int i = 0; i < at_p_; ++i) v *= sp;
        for (int i = 0; i < at_q_; ++i) v *= sq;
        for (const auto& o : others_) v *= std::sqrt((x - o.r) / o.d);
        return v;
    }


private:
    struct Other {
        cplx r, d;
    };
    int at_p_ = 0, at_q_ = 0;
    std::vector<Other> others_;
    cplx prefactor_{1.0};
};

// Point at parameter s in [0,1] on p -> q with its half-angle data.
struct SegPoint {
    cplx x;
    double sp, sq;
};

SegPoint seg_point(cplx p, cplx q, double sin_half, double cos_half)
{
    const double s = sin_half * sin_half, cs = cos_half * cos_half;
    const cplx x = (s <= 0.5) ? p + (q - p) * s : q - (q - p) * cs;
    return {x, sin_half, cos_half};
}

double sign_to_match(cplx target, cplx value)
{
    const cplx r = target / value;
    if (std::abs(std::abs(r) - 1.0) > 1e-6 || std::abs(r.imag()) > 1e-6) {
        std::ostringstream os;
        os << "sheet continuation lost track (ratio " << r << ")";
        throw ConventionError(os.str());
    }
    return r.real() > 0.0 ? 1.0 : -1.0;
}

bool is_root(const Curve& c, cplx z)
{
    const double tiny = 1e-14 * c.scale();
    return std::any_of(c.roots.begin(), c.roots.end(),
                       [&](cplx r) { return std::abs(r - z) <= tiny; });
}

// Continuation only tracks a sign, so it tolerates paths much closer to a
// branch point than quadrature does.
constexpr double continuation_clearance = 1e-12;

// Continue y from the anchor (sheet 1) along anchor -> pts... and return y at
// the last point.
cplx continue_from_anchor(const Curve& c, const std::vector<cplx>& pts, double clearance)
{
    cplx prev = c.anchor();
    cplx y = std::sqrt(c.lead);
    for (cplx r : c.roots) y *= std::sqrt(prev - r);
    for (cplx z : pts) {
        if (z == prev) continue;
        PathBranch b(c, prev, z, clearance);
        const double sg = sign_to_match(y, b.eval(prev, 0.0, 1.0));
        y = sg * b.eval(z, 1.0, 0.0);
        prev = z;
    }
    return y;
}

}  // namespace

double Curve::scale() const
{
    double s = 1.0;
    for (cplx r : roots) s = std::max(s, std::abs(r));
    return s;
}

double Curve::anchor() const
{
    double right = -INFINITY;
    for (cplx r : roots) right = std::max(right, r.real());
    return right + scale();
}

cplx integrate_gk(const std::function<cplx(double)>& f, double lo, double hi, double rel_tol,
                  double abs_tol, int max_panels)
{
    std::priority_queue<Panel> heap;
    Panel first = gk15(f, lo, hi);
    cplx total = first.value;
    double err = first.err;
    heap.push(first);
    int panels = 1;
    while (err > std::max(rel_tol * std::abs(total), abs_tol)) {
        if (panels >= max_panels) {
            std::ostringstream os;
            os << "adaptive quadrature did not converge (error estimate " << err << ")";
            throw ConvergenceError(os.str());
        }
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        Panel l = gk15(f, worst.lo, mid), r = gk15(f, mid, worst.hi);
        total += l.value + r.value - worst.value;
        err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        ++panels;
        if (!(std::abs(total) < INFINITY)) throw ConvergenceError("non-finite integrand");
    }
    // resum in order to shed the drift of the incremental updates
    cplx sum{};
    while (!heap.empty()) {
        sum += heap.top().value;
        heap.pop();
    }
    return sum;
}

cplx sheet_value(const Curve& c, cplx z, int sheet, const std::vector<cplx>& approach)
{
    std::vector<cplx> pts = approach;
    pts.push_back(z);
    const cplx y = continue_from_anchor(c, pts, continuation_clearance * c.scale());
    return sheet == 2 ? -y : y;
}

cplx line_integral(const Curve& c, const SheetedContour& path, const Linear& S,
                   const QuadOptions& opt)
{
    const auto& w = path.waypoints;
    if (w.size() < 2) return 0.0;
    const double clearance = opt.clearance * c.scale();
    for (std::size_t i = 1; i + 1 < w.size(); ++i)
        if (is_root(c, w[i]))
            throw DegeneracyError("contour passes through a branch point at an interior waypoint");

    // the sheet is matched at w[0], or at the middle of the first segment when
    // w[0] is itself a branch point
    const bool start_is_root = is_root(c, w[0]);
    std::vector<cplx> approach = path.approach;
    const cplx match = start_is_root ? 0.5 * (w[0] + w[1]) : w[0];
    approach.push_back(match);
    cplx y = continue_from_anchor(c, approach, continuation_clearance * c.scale());
    if (path.start_sheet == 2) y = -y;

    cplx total{};
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const cplx p = w[i], q = w[i + 1];
        if (p == q) continue;
        PathBranch b(c, p, q, clearance);
        double sg;
        if (i == 0 && start_is_root) {
            const double h = std::sqrt(0.5);
            sg = sign_to_match(y, b.eval(match, h, h));
        } else {
            sg = sign_to_match(y, b.eval(p, 0.0, 1.0));
        }
        const cplx dq = q - p;
        auto f = [&](double th) {
            const double sh = std::sin(0.5 * th), ch = std::cos(0.5 * th);
            const SegPoint pt = seg_point(p, q, sh, ch);
            // dx = (q - p) sin(th)/2 dth = (q - p) sh ch dth
            return S(pt.x) * dq * (sh * ch) / (sg * b.eval(pt.x, pt.sp, pt.sq));
        };
        total += integrate_gk(f, 0.0, pi, opt.rel_tol, 0.0, opt.max_panels);
        y = sg * b.eval(q, 1.0, 0.0);
    }
    return total;
}

cplx infinity_integral(const Curve& c, const Linear& S, cplx endpoint, int infinity_sign,
                       cplx direction, const QuadOptions& opt)
{
    if (c.roots.size() != 6) throw DomainError("infinity_integral: degree-6 curves only");
    if (S.c1 == cplx{} && S.c0 == cplx{}) return 0.0;
    const double clearance = opt.clearance * c.scale();
    if (direction == cplx{}) {
        cplx centroid{};
        for (cplx r : c.roots) centroid += r;
        centroid /= 6.0;
        direction = endpoint - centroid;
        if (std::abs(direction) < 1e-12 * c.scale()) direction = 1.0;
    }
    direction /= std::abs(direction);
    const double L = c.scale();
    PathBranch b(c, endpoint, endpoint + direction * L, clearance, true);

    // fix the sign from the behaviour y ~ +-sqrt(lead) x^3 far out on the ray
    const double t_far = 1e9;
    const cplx far = endpoint + direction * (t_far * L);
    const double sp_far = std::sqrt(t_far);
    const cplx y_far = b.eval(far, sp_far, 0.0);
    const cplx want = double(infinity_sign) * std::sqrt(c.lead) * far * far * far;
    const double sg = sign_to_match(want / std::abs(want), y_far / std::abs(y_far));

    // x = e + dir L w^2 / (1 - w^2); w^2 absorbs the endpoint square root
    auto f = [&](double wv) {
        const double w2 = wv * wv, om = 1.0 - w2;
        const double t = w2 / om;
        const cplx x = endpoint + direction * (L * t);
        const double sp = std::sqrt(t);  // (x - e) / (L dir) = t
        const cplx dxdw = direction * (L * 2.0 * wv / (om * om));
        return S(x) * dxdw / (sg * b.eval(x, sp, 0.0));
    };
    const cplx outward = integrate_gk(f, 0.0, 1.0, opt.rel_tol, 0.0, opt.max_panels);
    return -outward;
}

}  // namespace mono
