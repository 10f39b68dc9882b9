#include "mono/richelot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mono {

namespace {

void require_real_ordered(const SexticModel& m)
{
    const auto r = m.roots();
    for (int i = 0; i < 6; ++i) {
        if (r[i].imag() != 0.0) throw DomainError("real model expected");
        if (i > 0 && !(r[i - 1].real() < r[i].real()))
            throw DomainError("real model roots must be strictly increasing");
    }
}

std::array<double, 6> real_roots(const SexticModel& m)
{
    const auto r = m.roots();
    return {r[0].real(), r[1].real(), r[2].real(), r[3].real(), r[4].real(), r[5].real()};
}

SexticModel real_step(const SexticModel& m)
{
    const ResolventRoots rr = resolvent_roots(m);
    return real_model({rr.v, rr.w, rr.wp, rr.u, rr.up, rr.vp});
}

// Conjugate model relabelled so that a, b, c sit in the lower half plane.
// Swapping inside every pair changes none of the quadratics, only the labels.
SexticModel lower_labels(const SexticModel& m, bool& flipped)
{
    flipped = m.P.r1.imag() > 0.0;
    if (!flipped) return m;
    return {{m.P.r2, m.P.r1}, {m.Q.r2, m.Q.r1}, {m.R.r2, m.R.r1}, true};
}

void require_conjugate(const SexticModel& m)
{
    if (!m.conjugate_paired) throw DomainError("conjugate-paired model expected");
    for (const Quadratic* q : {&m.P, &m.Q, &m.R}) {
        const double s = std::max(1.0, std::abs(q->r1));
        if (std::abs(q->r2 - std::conj(q->r1)) > 1e-12 * s)
            throw DomainError("roots of a conjugate model must pair as r, conj(r)");
        if (std::abs(q->r1.imag()) < degeneracy_threshold * s)
            throw DegeneracyError("conjugate pair has collapsed onto the real axis");
    }
    if (!(m.P.r1.real() < m.Q.r1.real() && m.Q.r1.real() < m.R.r1.real()))
        throw DomainError("conjugate model needs Re a < Re b < Re c");
}

}  // namespace

std::string_view pair_name(Pair p)
{
    switch (p) {
    case Pair::AA: return "(a,a')";
    case Pair::BB: return "(b,b')";
    case Pair::CC: return "(c,c')";
    case Pair::AB: return "(a,b)";
    case Pair::ApBp: return "(a',b')";
    case Pair::BC: return "(b,c)";
    case Pair::BpCp: return "(b',c')";
    }
    return "?";
}

cplx t_factor(const SexticModel& m)
{
    const cplx a = m.P.r1, ap = m.P.r2, b = m.Q.r1, bp = m.Q.r2, c = m.R.r1, cp = m.R.r2;
    const cplx den = (b + bp - a - ap) * (c + cp - b - bp) * (c + cp - a - ap);
    return 2.0 * std::sqrt(delta_det(m)) / std::sqrt(den);
}

ConjugateOrdering classify_conjugate(const SexticModel& m)
{
    bool flipped;
    const SexticModel low = lower_labels(m, flipped);
    const ResolventRoots r = resolvent_roots(low);
    auto chain = [](std::initializer_list<double> xs) {
        return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>()) == xs.end();
    };
    if (chain({r.u, r.v, r.w, r.up, r.vp, r.wp})) return ConjugateOrdering::UVW;
    if (chain({r.w, r.v, r.u, r.wp, r.vp, r.up})) return ConjugateOrdering::WVU;
    std::ostringstream os;
    os.precision(15);
    os << "unrecognised resolvent ordering u,u',v,v',w,w' = " << r.u << ' ' << r.up << ' '
       << r.v << ' ' << r.vp << ' ' << r.w << ' ' << r.wp;
    throw DegeneracyError(os.str());
}

std::pair<SexticModel, cplx> richelot_step(const SexticModel& m)
{
    if (!m.conjugate_paired) {
        require_real_ordered(m);
        return {real_step(m), t_factor(m)};
    }
    require_conjugate(m);
    bool flipped;
    const SexticModel low = lower_labels(m, flipped);
    classify_conjugate(low);
    const ResolventRoots r = resolvent_roots(low);
    std::array<double, 6> s = {r.u, r.up, r.v, r.vp, r.w, r.wp};
    std::sort(s.begin(), s.end());
    SexticModel next = real_model(s);
    require_nondegenerate(next);
    return {next, t_factor(low)};
}

RichelotOrbit richelot_limits(const SexticModel& m, double tol)
{
    require_nondegenerate(m);
    RichelotOrbit orbit;
    SexticModel cur = m;
    orbit.states.push_back(cur);
    auto gap = [](const SexticModel& s) {
        return std::max({std::abs(s.P.r2 - s.P.r1), std::abs(s.Q.r2 - s.Q.r1),
                         std::abs(s.R.r2 - s.R.r1)});
    };
    double scale = 1.0;
    for (auto z : m.roots()) scale = std::max(scale, std::abs(z));
    double last = INFINITY;
    while (cur.conjugate_paired || gap(cur) >= tol * scale) {
        const double g = gap(cur);
        // once at roundoff level the gaps stop shrinking; further steps only
        // shuffle the last bits
        if (!cur.conjugate_paired && g < 1e-10 * scale && g > 0.5 * last) break;
        if (orbit.steps() == 64) throw ConvergenceError("Richelot iteration: no convergence in 64 steps");
        auto [next, t] = cur.conjugate_paired ? richelot_step(cur)
                                              : std::pair{real_step(cur), t_factor(cur)};
        orbit.t_factors.push_back(t);
        orbit.T *= t;
        if (!cur.conjugate_paired) last = g;
        cur = next;
        orbit.states.push_back(cur);
    }
    orbit.M_a = 0.5 * (cur.P.r1 + cur.P.r2).real();
    orbit.M_b = 0.5 * (cur.Q.r1 + cur.Q.r2).real();
    orbit.M_c = 0.5 * (cur.R.r1 + cur.R.r2).real();
    return orbit;
}

namespace {

struct ClosedForm {
    cplx aa, bb, cc;
};

ClosedForm closed_form(const SexticModel& m, const Linear& S)
{
    const RichelotOrbit o = richelot_limits(m);
    const double al = o.M_a, be = o.M_b, ga = o.M_c;
    const cplx k = pi * o.T;
    return {k * S(al) / ((al - be) * (al - ga)), k * S(be) / ((be - al) * (be - ga)),
            k * S(ga) / ((ga - al) * (ga - be))};
}

cplx upper_product(cplx x, const std::array<double, 6>& r)
{
    cplx p{1.0};
    for (double ri : r) p *= std::sqrt(x - ri);
    return p;
}

}  // namespace

RealPeriods real_periods(const SexticModel& m, const Linear& S)
{
    require_real_ordered(m);
    require_nondegenerate(m);
    const ClosedForm base = closed_form(m, S);

    // The gaps (a',b) and (b',c) become pairs of the model obtained from
    // x = x0 - 1/t with x0 inside (a,a') or (c,c'): the roots go to
    // 1/(x0 - r), the numerator to S~(t) = (s0 + s1 x0) t - s1, and
    // y(x) = k y~(t) / t^3. The wider outer pair keeps the image best spread.
    const auto r = real_roots(m);
    const bool use_a = (r[1] - r[0]) >= (r[5] - r[4]);
    const double x0 = use_a ? 0.5 * (r[0] + r[1]) : 0.5 * (r[4] + r[5]);
    std::array<double, 6> rho;
    for (int i = 0; i < 6; ++i) rho[i] = 1.0 / (x0 - r[i]);
    // images in increasing order: a' b b' c c' a, resp. c' a a' b b' c
    const std::array<double, 6> t_roots =
        use_a ? std::array<double, 6>{rho[1], rho[2], rho[3], rho[4], rho[5], rho[0]}
              : std::array<double, 6>{rho[5], rho[0], rho[1], rho[2], rho[3], rho[4]};
    const cplx t = I_unit;
    const cplx k = upper_product(x0 - 1.0 / t, r) * t * t * t / upper_product(t, t_roots);
    const Linear St{-S.c1, S.c0 + S.c1 * x0};
    const ClosedForm mapped = closed_form(real_model(t_roots), St);
    if (!use_a) return {base.aa, base.bb, base.cc, mapped.bb / k, mapped.cc / k};
    return {base.aa, base.bb, base.cc, mapped.aa / k, mapped.bb / k};
}

PairIntegralTable pair_integrals_real(const SexticModel& m, const Linear& S)
{
    const RealPeriods p = real_periods(m, S);
    PairIntegralTable t;
    t[Pair::AA] = p.aa;
    t[Pair::BB] = p.bb;
    t[Pair::CC] = p.cc;
    t[Pair::AB] = p.aa + p.apb;
    t[Pair::ApBp] = p.apb + p.bb;
    t[Pair::BC] = p.bb + p.bpc;
    t[Pair::BpCp] = p.bpc + p.cc;
    return t;
}

PairIntegralTable integrals_conjugate(const SexticModel& m, const Linear& S)
{
    require_conjugate(m);
    bool flipped;
    const SexticModel low = lower_labels(m, flipped);
    const ConjugateOrdering ord = classify_conjugate(low);
    const auto [next, t0] = richelot_step(low);
    // Roundoff in the resolvent roots is amplified by the inverse separation;
    // the curves with a three-fold symmetry sit exactly at zero separation.
    if (min_relative_separation(next) < conjugate_min_separation)
        throw DegeneracyError("first Richelot step is too close to degenerate for double precision");
    const RealPeriods q = real_periods(next, S);
    const cplx P1 = q.aa, P2 = q.bb, G1 = q.apb, G2 = q.bpc;

    PairIntegralTable t;
    if (ord == ConjugateOrdering::UVW) {
        t[Pair::AA] = t0 * G1;
        t[Pair::BB] = t0 * (G1 - G2);
        t[Pair::CC] = -t0 * G2;
        t[Pair::AB] = 0.5 * t0 * (P1 + G2);
        t[Pair::ApBp] = 0.5 * t0 * (P1 - G2);
        t[Pair::BC] = 0.5 * t0 * (-P1 - P2 + G1);
        t[Pair::BpCp] = 0.5 * t0 * (-P1 - P2 - G1);
    } else {
        t[Pair::AA] = -t0 * P1;
        t[Pair::BB] = t0 * P2;
        t[Pair::CC] = t0 * (P1 + P2);
        t[Pair::AB] = 0.5 * t0 * (-P1 - P2 + G1);
        t[Pair::ApBp] = 0.5 * t0 * (P1 + P2 + G1);
        t[Pair::BC] = 0.5 * t0 * (-P1 - G2);
        t[Pair::BpCp] = 0.5 * t0 * (P1 - G2);
    }
    if (!flipped) return t;

    // caller's a is our a': reverse the vertical pairs, swap primed/unprimed cross pairs
    PairIntegralTable u;
    u[Pair::AA] = -t[Pair::AA];
    u[Pair::BB] = -t[Pair::BB];
    u[Pair::CC] = -t[Pair::CC];
    u[Pair::AB] = t[Pair::ApBp];
    u[Pair::ApBp] = t[Pair::AB];
    u[Pair::BC] = t[Pair::BpCp];
    u[Pair::BpCp] = t[Pair::BC];
    return u;
}

}  // namespace mono
