#pragma once

#include <functional>
#include <vector>

#include "mono/common.hpp"

namespace mono {

// y^2 = lead * prod (x - roots[i]).
//
// Sheet 1 is fixed at a real anchor x0 to the right of every root, where
// y(x0) = sqrt(lead) * prod sqrt(x0 - r) with principal roots. For a monic
// curve whose non-real roots come in conjugate pairs this is the positive
// square root. Everywhere else y is obtained by analytic continuation along
// the polyline anchor -> approach points -> contour.
struct Curve {
    std::vector<cplx> roots;
    cplx lead{1.0};

    double scale() const;
    double anchor() const;
};

struct SheetedContour {
    std::vector<cplx> waypoints;
    int start_sheet = 1;
    // Optional points between the anchor and the matching point of the
    // contour, to steer the continuation that fixes the starting sheet.
    std::vector<cplx> approach;
};

struct QuadOptions {
    double rel_tol = 1e-11;
    double clearance = 1e-6;
    int max_panels = 4000;
};

// Adaptive Gauss-Kronrod (7/15) integration of a complex function on [lo, hi].
cplx integrate_gk(const std::function<cplx(double)>& f, double lo, double hi, double rel_tol,
                  double abs_tol = 0.0, int max_panels = 4000);

// Integral of S(x) dx / y along the contour. Endpoints of the contour may be
// branch points; interior waypoints may not.
cplx line_integral(const Curve& c, const SheetedContour& path, const Linear& S,
                   const QuadOptions& opt = {});

// y at z on the given sheet, continued from the anchor via the approach points.
cplx sheet_value(const Curve& c, cplx z, int sheet = 1, const std::vector<cplx>& approach = {});

// Integral of S dx / y from a point at infinity to `endpoint` along a
// straight ray. Degree-6 curves only: infinity_sign = +1 selects the point
// where y / x^3 -> +sqrt(lead), -1 the other one. `direction` is the ray's
// direction; zero picks one pointing away from the roots' centroid.
cplx infinity_integral(const Curve& c, const Linear& S, cplx endpoint, int infinity_sign = 1,
                       cplx direction = {}, const QuadOptions& opt = {});

}  // namespace mono
