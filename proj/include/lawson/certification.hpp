#pragma once

#include <string>
#include <vector>

#include "lawson/calibration.hpp"
#include "lawson/cone.hpp"
#include "lawson/interval.hpp"
#include "lawson/rational.hpp"
#include "lawson/surd.hpp"

namespace lawson {

// q(t) = a t^2 + b t + c on [lo, hi], all exact rationals.
struct QuadraticOnInterval {
    Rational a, b, c;
    Rational lo, hi;

    Rational eval(const Rational& t) const { return a * t * t + b * t + c; }
};

struct QuadMinResult {
    Rational argmin;
    Rational min;
};

// Exact global minimum over the closed interval; interior vertex when it
// lies inside, else the better endpoint; ties broken toward the lower endpoint.
QuadMinResult quad_min(const QuadraticOnInterval& q);

// The four polynomials of the inequality chains.
QuadraticOnInterval poly_p2();             // 27 t^2 - 48 t + 25
QuadraticOnInterval poly_p3();             // 27 t^2 - 72 t + 49
QuadraticOnInterval poly_q3();             // 27 t^2 - 123 t + 98
QuadraticOnInterval poly_q2(int k);        // (k-1) t^2 + (3-4k) t + 4(k-2)

// Branch function reduced to the unit arc by 0-homogeneity.
//
// With the branch's power variable normalized to 1 and tau in [0, 1] the
// ratio of the other variable to it:
//   G(tau) = |div g| |z|^2 / |sqrt(u) - sqrt(v)|
//          = cN (1 + sqrt(tau)) P(tau) Z(tau) / E(tau)^{3/2}
//   F(tau) = sqrt(m - 2) * G(tau)   (the distance-normalized quantity)
// where P, E are the quadratics from BranchCoeffs and Z(tau) = z0 + z1 tau
// encloses |z|^2. The removable (u - v)/dist singularity at the cone angle
// is cancelled analytically in this form.
struct ReducedBranchProfile {
    BranchKind kind;
    Rational d;
    ConeParams cone;
    Rational cN, pWW, pWO, pOO, eWW, eWO, eOO, z0, z1;
    int m_minus_2 = 0;

    template <class T>
    T eval_G(const T& tau) const {
        using std::sqrt;
        const T p = scalar_of<T>(pWW) + scalar_of<T>(pWO) * tau + scalar_of<T>(pOO) * tau * tau;
        const T e = scalar_of<T>(eWW) + scalar_of<T>(eWO) * tau + scalar_of<T>(eOO) * tau * tau;
        const T z = scalar_of<T>(z0) + scalar_of<T>(z1) * tau;
        return scalar_of<T>(cN) * (T(1.0) + sqrt(tau)) * p * z / (e * sqrt(e));
    }

    template <class T>
    T eval_F(const T& tau) const {
        using std::sqrt;
        return sqrt(T(static_cast<double>(m_minus_2))) * eval_G(tau);
    }
};

ReducedBranchProfile reduced_branch_profile(const ConeParams& cone, BranchKind kind);

// The paper-claimed constant c_{k,h}: sqrt(3)/21^3 for {3,5},
// sqrt(11)/11^6 for the {2, 7..11} family.
Surd claimed_constant(const ConeParams& cone);

enum class ChainMethod { ExactArithmetic, QuadMin, IntervalSweep };

inline const char* chain_method_name(ChainMethod m) {
    switch (m) {
        case ChainMethod::ExactArithmetic: return "exact";
        case ChainMethod::QuadMin: return "quad_min";
        default: return "interval_sweep";
    }
}

struct ChainStep {
    std::string name;
    ChainMethod method;
    bool holds;
    std::string detail;
};

struct BranchChainResult {
    ConeParams cone;
    BranchKind kind;
    Surd terminus;           // final coefficient of |sqrt u - sqrt v| / |z|^2
    Surd per_cone_constant;  // the sharper per-cone coefficient the steps prove
    Surd dist_normalized;    // terminus * sqrt(m-2), coefficient per dist/|z|^2
    std::vector<ChainStep> steps;
    std::string note;
};

// Branch-wise inequality chains with every step verified (exact arithmetic,
// exact quadratic minimization, or a rigorous interval sweep). Throws
// ChainStepViolation if any step fails.
BranchChainResult branch_chain(const ConeParams& cone, BranchKind kind);
BranchChainResult branch_chain_2k(int k, BranchKind kind);
BranchChainResult branch_chain_35(BranchKind kind);

struct BranchSweepResult {
    BranchKind kind;
    Rational d;
    double lower_bound = 0.0;     // verified inf of F over the branch arc
    double min_estimate = 0.0;    // informational midpoint minimum
    double argmin = 0.0;          // location of the informational minimum
    int subdivisions = 0;
};

struct Certificate {
    ConeParams cone;
    Surd claimed_c;
    int subdivisions = 0;
    double verified_lower_bound = 0.0;  // min over both branches, outward-rounded down
    double margin = 0.0;                // verified_lower_bound - upper(claimed_c)
    double true_min_estimate = 0.0;     // informational: observed minimum of F
    BranchSweepResult upower = {};
    BranchSweepResult vpower = {};
    bool pass = false;
};

// Interval-arithmetic sweep of F = |div g| |z|^2 / dist over the unit arc,
// branch-wise in the ratio coordinate. Verifies F >= c_{k,h} rigorously.
Certificate certify_pointwise(const ConeParams& cone, int subdivisions);

// Rigorous lower bound of G over one branch arc (used by chain verification).
double sweep_branch_lower_bound_G(const ReducedBranchProfile& profile, int subdivisions);

}  // namespace lawson
