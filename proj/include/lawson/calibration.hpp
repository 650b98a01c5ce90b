#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "lawson/cone.hpp"
#include "lawson/errors.hpp"
#include "lawson/interval.hpp"
#include "lawson/rational.hpp"

namespace lawson {

enum class BranchKind { UPower, VPower };

inline const char* branch_name(BranchKind b) {
    return b == BranchKind::UPower ? "UPower" : "VPower";
}

// One branch of the calibration function:
//   UPower: f = (u - v) u^d / 4, used on { u > v } (complement of K)
//   VPower: f = (u - v) v^d / 4, used on { u < v } (inside K)
struct CalibrationBranch {
    BranchKind kind;
    Rational d;
    ConeParams cone;
};

// The exponents that make g a sub-calibration for the certified pairs:
// d = 3/4 on both branches when {k,h} = {3,5}; d = 3/2 on the branch whose
// power variable comes from the 2-dimensional factor's complement, d = 1 on
// the other, for the {2, 7..11} family.
CalibrationBranch certified_branch(const ConeParams& cone, BranchKind kind);

// Branch used at a point: VPower in K, UPower in the complement, either on M.
CalibrationBranch branch_for_region(const ConeParams& cone, Region region);

// Exact rational coefficients of the closed forms, derived once per branch.
//
// With w the branch's power variable and o the other one:
//   |grad f|^2 = w^(2d-1) * E(w, o),   E = eWW w^2 + eWO w o + eOO o^2
//   |grad f|^3 div g = sgn * cN * (u - v) * w^(3d-2) * P(w, o),
//        P = pWW w^2 + pWO w o + pOO o^2
// so that, with exponents pre-combined,
//   div g = sgn * cN * (u - v) * P(w, o) / (sqrt(w) * E(w, o)^(3/2)).
// sgn is +1; the (u - v) factor carries the sign on both branches.
struct BranchCoeffs {
    Rational cN;
    Rational pWW, pWO, pOO;
    Rational eWW, eWO, eOO;
    Rational d;
    BranchKind kind;
};

BranchCoeffs branch_coeffs(const CalibrationBranch& b);

// Coefficients converted for a scalar type: exact-to-nearest for double,
// outward-rounded enclosures for Interval. Both evaluation paths share the
// same expression template below, so the closed form exists once.
template <class T>
struct BranchCoeffsOf {
    T cN, pWW, pWO, pOO, eWW, eWO, eOO;
};

template <class T>
T scalar_of(const Rational& q);
template <>
inline double scalar_of<double>(const Rational& q) { return to_double(q); }
template <>
inline Interval scalar_of<Interval>(const Rational& q) { return to_interval(q); }

template <class T>
BranchCoeffsOf<T> convert_coeffs(const BranchCoeffs& c) {
    return {scalar_of<T>(c.cN),  scalar_of<T>(c.pWW), scalar_of<T>(c.pWO),
            scalar_of<T>(c.pOO), scalar_of<T>(c.eWW), scalar_of<T>(c.eWO),
            scalar_of<T>(c.eOO)};
}

// div g as the pre-combined quotient; the single definition evaluated in
// both floating point and interval arithmetic.
template <class T>
T div_g_expr(const T& u, const T& v, BranchKind kind, const BranchCoeffsOf<T>& c) {
    const bool up = kind == BranchKind::UPower;
    const T& w = up ? u : v;
    const T& o = up ? v : u;
    const T poly = c.pWW * w * w + c.pWO * w * o + c.pOO * o * o;
    const T e = c.eWW * w * w + c.eWO * w * o + c.eOO * o * o;
    using std::sqrt;
    return c.cN * (u - v) * poly / (sqrt(w) * (e * sqrt(e)));
}

// w^(num/den) for den in {1, 2, 4}, w >= 0. The double overload accepts any
// rational exponent; the interval overload is restricted to sqrt chains.
double pow_q(double x, const Rational& e);
Interval pow_q(Interval x, const Rational& e);

// f on the given branch; constant positive multiples of the original table
// normalization, which do not affect g.
double f_value(const ReducedPoint& p, const CalibrationBranch& b);

// Radial gradient components: grad f = (gx * xhat, gy * yhat).
struct RadialGradient {
    double gx = 0.0;
    double gy = 0.0;
    double norm_sq() const { return gx * gx + gy * gy; }
};
RadialGradient grad_f(const ReducedPoint& p, const CalibrationBranch& b);

// |grad f|^2 in closed form (equals RadialGradient::norm_sq analytically).
double grad_norm_sq(const ReducedPoint& p, const CalibrationBranch& b);

// div(grad f / |grad f|) in closed form, quotient with exponents pre-combined.
double div_g_closed(const ReducedPoint& p, const CalibrationBranch& b);

// Interval version of the same closed form, sharing BranchCoeffs.
Interval div_g_closed(Interval u, Interval v, const BranchCoeffs& c);

// Unit field sample: g in radial components plus div g and |grad f|^2.
struct FieldSample {
    double g_x = 0.0;
    double g_y = 0.0;
    double div_g = 0.0;
    double grad_norm_sq = 0.0;
};
FieldSample g_field(const ReducedPoint& p, const ConeParams& cone);

// Central-difference divergence of g in ambient coordinates; the oracle for
// div_g_closed. g itself is built from the first-derivative formulas only.
double div_g_fd(const AmbientPoint& p, const CalibrationBranch& b, double step);

// Max Frobenius norm of the ambient Jacobian of g over a direction grid at
// each radius, times the radius. Constant along rays by 0-homogeneity.
struct DerivativeGrowthReport {
    std::vector<double> radii;
    std::vector<double> max_dg_times_r;
    std::vector<double> worst_theta;
    bool bounded = false;  // max/min ratio of the products at most 2
};
DerivativeGrowthReport derivative_growth_probe(const ConeParams& cone,
                                               const std::vector<double>& radii,
                                               int theta_samples = 256);

}  // namespace lawson
