#pragma once

#include <vector>

#include "lawson/cone.hpp"
#include "lawson/profile.hpp"

namespace lawson {

// Q = link_area * int (phi'^2 - (m-2)/r^2 phi^2) r^(m-2) dr
// N = link_area * int phi^2 r^(m-2) dr
// Per-cell Gauss quadrature of the stated order; exact for the piecewise
// linear profile representation when order >= 8.
struct QuadraticFormResult {
    double Q = 0.0;
    double N = 0.0;
};
QuadraticFormResult quadratic_form(const RadialProfile& phi, const ConeParams& cone,
                                   double link_area_factor, int order = 8);
QuadraticFormResult quadratic_form(const RadialProfile& phi, const ConeParams& cone);

// Symmetric tridiagonal matrix (diag size n, off size n-1).
struct Tridiag {
    std::vector<double> diag;
    std::vector<double> off;
};

// P1 finite elements for the weighted radial pencil on the given node grid,
// Dirichlet at both ends:
//   A(phi,phi) = int (phi'^2 - potential_coeff/r^2 phi^2) r^(m-2) dr
//   B(phi,phi) = int phi^2 r^(m-2) dr
// Element integrals are closed forms, so the discrete problem is the exact
// Rayleigh-Ritz projection and its eigenvalues bound the continuum ones
// from above.
struct RadialPencil {
    Tridiag A, B;
};
RadialPencil assemble_radial_pencil(const std::vector<double>& grid, int m,
                                    double potential_coeff);

// Number of generalized eigenvalues of (A, B) strictly below sigma (B SPD).
int sturm_count(const Tridiag& A, const Tridiag& B, double sigma);

// Smallest generalized eigenvalue by Sturm bisection within [lo, hi].
double smallest_eigenvalue(const Tridiag& A, const Tridiag& B, double lo, double hi,
                           double rel_tol = 1e-13);

// Log-uniform grid on [R * 1e-6, R] with n nodes.
std::vector<double> log_grid(double R, int n);

struct SpectrumReport {
    ConeParams cone;
    double R = 0.0;
    int grid_size = 0;
    double lambda = 0.0;            // smallest eigenvalue at grid_size
    double lambda_times_R2 = 0.0;
    double lambda_extrapolated = 0.0;  // Richardson from n/2 and n
    double convergence_order = 0.0;    // empirical, from n/4, n/2, n
    double hardy_floor = 0.0;          // (m-3)^2/4 - (m-2)
    double claimed_c = 0.0;            // c_{k,h} as a double
    double margin_factor = 0.0;        // lambda * R^2 / c_{k,h}
};

// Smallest Dirichlet eigenvalue of the radial stability operator
//   -r^(2-m) (r^(m-2) phi')' - (m-2)/r^2 phi
// on (R*1e-6, R), with scaling, extrapolation and floor diagnostics.
SpectrumReport lambda_estimate(const ConeParams& cone, double R, int n);

// Same operator with the potential shifted by a link eigenvalue mu:
// potential (m-2) -> (m-2) - mu. Used to spot-check that non-radial
// angular modes only raise the Rayleigh quotient.
double lambda_estimate_shifted(const ConeParams& cone, double R, int n, double mu);

// First nonzero Laplace eigenvalue of the cone's link (product of round
// spheres), computed numerically from the two 1-D sphere reductions.
double link_first_eigenvalue(const ConeParams& cone, int n = 512);

// Second-variation Taylor check: builds normal-graph competitors at each t,
// compares DeltaP(t) * 2/t^2 against the quadratic form and fits the
// remainder order; also checks the dist-weighted volume expansion.
struct TaylorCheckReport {
    std::vector<double> t_values;
    std::vector<double> delta_p;          // P(F;H_R) - P(K;H_R)
    std::vector<double> q_from_graph;     // DeltaP * 2/t^2
    std::vector<double> dist_volume;      // int_{K Delta F} dist
    std::vector<double> n_from_graph;     // dist_volume * 2/t^2
    double Q = 0.0;                       // quadratic form of phi
    double N = 0.0;                       // int phi^2
    double q_limit_rel_error = 0.0;       // |q_from_graph(smallest t)/Q - 1|
    double n_limit_rel_error = 0.0;
    double remainder_slope = 0.0;         // log-log slope of |DeltaP - t^2 Q/2|
    double volume_remainder_slope = 0.0;
};
TaylorCheckReport taylor_second_variation_check(const ConeParams& cone,
                                                const RadialProfile& phi,
                                                const std::vector<double>& t_values,
                                                double R);

}  // namespace lawson
