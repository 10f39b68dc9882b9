#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "mono/common.hpp"
#include "mono/hyperpoly.hpp"
#include "mono/quadrature.hpp"
#include "mono/richelot.hpp"

namespace mono {

// Member of the quotient family Y^2 = (X^3 + a X + g)^2 + 4, with a = alpha /
// beta^(2/3) and g = gamma / beta.
struct CurveParams {
    double a = 0.0;
    double g = 0.0;
};

// B[0..5] hold B1..B6. B1, B2, B3 lie in the lower half plane ordered by
// decreasing real part; B4 = conj B3, B5 = conj B2, B6 = conj B1. Pair labels:
// a = B4, a' = B3, b = B5, b' = B2, c = B6, c' = B1. With this labelling the
// basis below has positive definite Im tau.
struct BranchPointSet {
    std::array<cplx, 6> B{};

    cplx operator()(int j) const { return B.at(j - 1); }  // 1-based like the labels
    SexticModel model() const { return conjugate_model(B[3], B[4], B[5]); }
    Curve curve() const { return Curve{{B.begin(), B.end()}, 1.0}; }
};

BranchPointSet quotient_branch_points(const CurveParams& p);

// Cardano's formula for X^3 + a X + g -+ 2i = 0, used to cross-check the
// companion-matrix roots. Returns the six roots unlabelled.
std::array<cplx, 6> closed_form_branch_points(const CurveParams& p);

// zeta coordinates of the 12 ramification points of the genus 4 curve
// eta^3 + alpha eta zeta^2 + beta zeta^6 + gamma zeta^3 - beta = 0.
std::array<cplx, 12> genus4_branch_points(double alpha, double beta, double gamma);

// Integer combination of the basis cycles.
struct CycleExpr {
    long a0 = 0, b0 = 0, a1 = 0, b1 = 0;

    bool operator==(const CycleExpr&) const = default;
};

struct IntSet {
    int n0 = 0, n = 0, m0 = 0, m = 0;

    bool operator==(const IntSet&) const = default;
};

inline constexpr IntSet intset_plus{4, 1, -3, 1};   // through (0, +5 sqrt 2)
inline constexpr IntSet intset_minus{5, 1, -3, 0};  // through (0, -5 sqrt 2)

// n0 a0 + 3n a1 + 3m0 b0 + 3m b1
CycleExpr cycle_c(const IntSet& s);

// J(p,q) = integral of S dX / Y from p to q on sheet 1, straight path, inside
// boundary value on cuts. Relation to the pair tables: J = -i I.
using PairTerm = std::pair<long, Pair>;

// A cycle as sum of coef * J(pair), aggregated, in Pair order.
std::vector<PairTerm> cycle_to_pairs(const CycleExpr& e);

enum class Evaluator { Agm, Oracle };

struct PairValues {
    std::array<cplx, 7> J{};  // indexed by Pair
    bool fallback = false;    // Agm requested but the oracle had to be used

    cplx operator[](Pair p) const { return J[static_cast<int>(p)]; }
};

PairValues pair_values(const BranchPointSet& bps, const Linear& S, Evaluator ev = Evaluator::Agm,
                       const QuadOptions& opt = {});

cplx cycle_integral(const CycleExpr& e, const PairValues& v);

// Integral over a basis cycle computed directly from the hexagon edges by the
// oracle, independent of the pair reduction.
cplx basis_cycle_direct(const BranchPointSet& bps, const CycleExpr& e, const Linear& S,
                        const QuadOptions& opt = {});

// Straight-line integral B_j -> B_k of S dX/Y on sheet 1 by the oracle.
cplx edge_integral(const BranchPointSet& bps, int j, int k, const Linear& S,
                   const QuadOptions& opt = {});

using Mat2 = std::array<std::array<cplx, 2>, 2>;

struct PeriodData {
    BranchPointSet bps;
    // rows: cycles (a0, a1) resp. (b0, b1); columns: dX/Y, X dX/Y
    Mat2 A{}, B{};
    Mat2 tau{};
    PairValues J1, JX;  // pair values for S = 1 and S = X
};

PeriodData period_matrix(const CurveParams& p, Evaluator ev = Evaluator::Agm,
                         const QuadOptions& opt = {});

// Characteristic [alpha; beta] of z = beta + alpha tau.
struct Characteristic {
    std::array<double, 2> alpha{}, beta{};
};

Characteristic characteristic_of(const std::array<cplx, 2>& z, const Mat2& tau);

// Normalized vector z_u A^-1 for raw integrals z_u = (int dX/Y, int X dX/Y).
std::array<cplx, 2> normalize(const std::array<cplx, 2>& zu, const PeriodData& pd);

// Distance between two characteristics modulo integers (max norm).
double char_distance_mod1(const Characteristic& x, const Characteristic& y);

// The point at infinity called infinity+ is the one where Y / X^3 -> -1 on our
// sheet 1. This is the only choice for which K_inf+ = A_inf+(B1) + K_B1 holds
// with the characteristic of K_inf+ below; it amounts to one global flip of
// the sheet anchor for this identity.
inline constexpr int infinity_plus_sign = -1;

struct AbelTable {
    std::array<Characteristic, 6> A_B1;  // A_{B1}(B_j), j = 1..6
    Characteristic K_B1;
    Characteristic A_inf_B1;             // A_{infinity+}(B1)
};

AbelTable abel_characteristics(const PeriodData& pd, const QuadOptions& opt = {});

// Expected values of the table above.
const std::array<Characteristic, 6>& expected_abel_table();
Characteristic expected_K_B1();
Characteristic expected_A_inf_B1();
Characteristic expected_K_inf();

// K_{infinity+} = (1/2) tau^(0) + (1/2) tau^(1) + (1/6, 1/2)
std::array<cplx, 2> riemann_constants_infinity(const PeriodData& pd);

// Max-norm distances mod 1 from the expected values.
struct AbelCheck {
    double table = 0;         // worst of the six A_{B1}(B_j)
    double K_B1 = 0;
    double A_inf_B1 = 0;
    double K_inf_identity = 0; // K_inf+ against A_inf+(B1) + K_B1

    double worst() const { return std::max({table, K_B1, A_inf_B1, K_inf_identity}); }
};

AbelCheck check_abel(const PeriodData& pd, const AbelTable& t);

using IMat4 = std::array<std::array<long, 4>, 4>;

// Matrix of the antiholomorphic involution acting on row vectors of
// coefficients over (a0, a1, b0, b1).
const IMat4& involution_matrix();

struct InvolutionReport {
    bool square_is_identity = false;
    bool antisymplectic = false;   // M J M^T = -J
    bool eigen_plus = false;       // (4,3,-9,3) M = -(4,3,-9,3)
    bool eigen_minus = false;      // (5,3,-9,0) M = -(5,3,-9,0)

    bool all() const { return square_is_identity && antisymplectic && eigen_plus && eigen_minus; }
};

InvolutionReport involution_matrix_checks();

}  // namespace mono
