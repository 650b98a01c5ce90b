#pragma once

#include "lawson/cone.hpp"
#include "lawson/rational.hpp"
#include "lawson/surd.hpp"

namespace lawson {

// Exact 2-D quadrature of |H_R intersect {p < eps}| (piecewise polynomial
// integrand, exact between the clipping breakpoints).
double slab_volume(const ConeParams& cone, double R, double eps);

// The closed-form slab bound and its two proof parts:
//   inner: over B_{eps sqrt(h-1)} in the y factor
//   outer: the shell, via (1+t)^k - (1-t)^k <= 2^k t
// total = 2^k w_k w_h (k-1)^{k/2} (h-1)^{h/2} eps (eps^{m-1}
//         + h R^{m-1} / ((h-1)^{(m-1)/2} (m-1))), and total = inner + outer.
struct SlabBoundParts {
    double inner = 0.0;
    double outer = 0.0;
    double total = 0.0;
};
SlabBoundParts slab_bound_paper(const ConeParams& cone, double R, double eps);

// (1+t)^k - (1-t)^k <= 2^k t on a grid of (0, 1).
bool elementary_power_inequality_holds(int k, int grid_points = 1000);

// The eps-optimization at the end of the proof of the quadratic stability
// inequality: alpha <= 6 sqrt(delta) when delta >= 36, else
// alpha <= 7*12*10^10 sqrt(delta) at eps = R sqrt(delta/36).
struct AlphaBoundResult {
    double eps_opt = 0.0;
    double alpha_bound = 0.0;
    bool volume_regime = false;  // delta >= 36
    double amgm_lhs = 0.0;       // R delta/eps + 36 eps/R at eps_opt
    double amgm_rhs = 0.0;       // 12 sqrt(delta)
    bool eps_gate = true;        // eps_opt < 35^{1/13} R
};
AlphaBoundResult alpha_bound_chain(const ConeParams& cone, double R, double delta);

// C = 7^2 * 12^2 * 10^20, exact and as a double.
Rational theorem1_constant();
double theorem1_constant_value();

// Exact dominance checks behind the uniform constant 7*10^10:
// the per-cone perimeter coefficient l/c_{k,h} and the per-cone slab
// coefficient (with w_k w_h <= 36) are both dominated by the displayed
// uniform constants, which are in turn dominated by 7*10^10.
struct ConstantDerivation {
    ConeParams cone;
    Surd perimeter_coeff;        // l / c_{k,h}
    Surd perimeter_coeff_paper;  // 2 * 11^5 * sqrt(11)
    Surd slab_coeff;             // 2^k * 36 * (k-1)^{k/2} (h-1)^{h/2} * max(1, h/((h-1)^{(m-1)/2}(m-1)))
    Surd slab_coeff_paper;       // 2^11 * 6^2 * 10^{11/2} * 2^{3/2}
    bool perimeter_ok = false;   // perimeter_coeff <= perimeter_coeff_paper <= 7e10
    bool slab_ok = false;        // slab_coeff <= slab_coeff_paper <= 7e10
};
ConstantDerivation constant_derivation(const ConeParams& cone);

}  // namespace lawson
