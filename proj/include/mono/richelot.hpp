#pragma once

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "mono/common.hpp"
#include "mono/hyperpoly.hpp"

namespace mono {

enum class Pair { AA, BB, CC, AB, ApBp, BC, BpCp };

inline constexpr std::array<Pair, 7> all_pairs = {Pair::AA, Pair::BB,   Pair::CC,  Pair::AB,
                                                  Pair::ApBp, Pair::BC, Pair::BpCp};

std::string_view pair_name(Pair p);

// I(p, q) = integral of S dx / sqrt(-P Q R) between the two labelled roots.
//
// Real models: straight path along the real axis approached from above, with
// sqrt(-PQR) = -i y and y the sheet-1 branch of y^2 = PQR continued through the
// upper half plane. Conjugate models: sqrt(-PQR) = -i Y where Y is the branch of
// Y^2 = PQR analytic off the three cuts [c', b'], [a, a'], [b, c] (the lower
// half plane labels being a, b, c), positive far out on the real axis; paths
// are straight segments and on a cut the value from inside the hexagon
// a b c c' b' a' is used.
struct PairIntegralTable {
    std::array<cplx, 7> values{};

    cplx& operator[](Pair p) { return values[static_cast<int>(p)]; }
    cplx operator[](Pair p) const { return values[static_cast<int>(p)]; }
};

struct RichelotOrbit {
    std::vector<SexticModel> states;
    std::vector<cplx> t_factors;
    double M_a = 0, M_b = 0, M_c = 0;
    cplx T{1.0};

    int steps() const { return static_cast<int>(t_factors.size()); }
};

// t = 2 sqrt(Delta) / sqrt((b+b'-a-a')(c+c'-b-b')(c+c'-a-a')), principal roots.
cplx t_factor(const SexticModel& m);

// How the six real resolvent roots of a conjugate model interlace.
enum class ConjugateOrdering {
    UVW,  // u < v < w < u' < v' < w'   (seen for a > 0 on the monopole family)
    WVU,  // w < v < u < w' < v' < u'   (a < 0)
};

ConjugateOrdering classify_conjugate(const SexticModel& m);

// One Richelot step. Real models map to real models; a conjugate model maps
// to the real model built from its sorted resolvent roots.
std::pair<SexticModel, cplx> richelot_step(const SexticModel& m);

RichelotOrbit richelot_limits(const SexticModel& m, double tol = 1e-14);

// The three pair integrals and the two finite gaps of a real model.
struct RealPeriods {
    cplx aa, bb, cc;  // I(a,a'), I(b,b'), I(c,c')
    cplx apb, bpc;    // I(a',b), I(b',c)
};

RealPeriods real_periods(const SexticModel& m, const Linear& S);

PairIntegralTable pair_integrals_real(const SexticModel& m, const Linear& S);

// Below this relative separation of the first-step roots the conjugate tables
// lose more than ~1e-10 and integrals_conjugate reports a degeneracy.
inline constexpr double conjugate_min_separation = 1e-6;

PairIntegralTable integrals_conjugate(const SexticModel& m, const Linear& S);

}  // namespace mono
