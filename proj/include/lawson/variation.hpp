#pragma once

#include <functional>
#include <vector>

#include "lawson/cone.hpp"
#include "lawson/profile.hpp"

namespace lawson {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Axisymmetric competitor boundary as a polyline in the (r_x, r_y) quarter
// plane; coincides with the cone's profile line outside a compact window.
struct ProfileCurve {
    std::vector<Vec2> pts;
    ConeParams cone;
    // Arclength window [s_lo, s_hi] along the base line where the curve may
    // deviate from it (empty deviation for the cone itself).
    double s_lo = 0.0;
    double s_hi = 0.0;
};

// The cone's own profile line out to arclength s_end.
ProfileCurve cone_line_curve(const ConeParams& cone, double s_end);

// Boundary of the normal-graph competitor: base point at arclength s moved
// by t * phi(s) along the outward normal of K. The polyline extends along
// the cone line from the apex and beyond the window of radius R.
ProfileCurve normal_graph(const RadialProfile& phi, double t, const ConeParams& cone, double R);

// Weighted length of the curve inside the window H_R = {r_x <= R, r_y <= R}:
//   integral of (k w_k r_x^(k-1))(h w_h r_y^(h-1)) * density over the curve.
// With the default density 1 the per-segment quadrature is exact.
double axisym_perimeter(const ProfileCurve& c, double R);
double axisym_perimeter_weighted(const ProfileCurve& c, double R,
                                 const std::function<double(Vec2)>& density);

// Weighted area of a closed polygon region (Green's theorem; exact for the
// polynomial weight). Vertices in order; sign-normalized.
double axisym_volume_polygon(const std::vector<Vec2>& polygon, const ConeParams& cone);

// Weighted integral over the strip K Delta F between the cone line and the
// normal graph of t*phi: integral ds integral_0^{t phi(s)} density * weight.
// density receives the point and the signed normal offset tau. order controls
// the arclength direction; the short normal direction is always integrated
// at high order.
double strip_integral(const RadialProfile& phi, double t, const ConeParams& cone,
                      const std::function<double(Vec2, double)>& density, int order = 8,
                      int order_inner = 8);

// Perimeter difference P(F;H_R) - P(K;H_R) for the normal-graph competitor;
// localized to the support (curves coincide elsewhere).
double perimeter_increment(const RadialProfile& phi, double t, const ConeParams& cone, double R,
                           int order = 8);

struct Lemma1Report {
    double lhs = 0.0;            // P(F;H_R) - P(K;H_R)
    double volume_term = 0.0;    // int_{K Delta F} |div g|
    double boundary_term = 0.0;  // int_{dF cap H_R} (1 - g . nu_F) dH^{m-1}
    double rhs = 0.0;
    double rel_gap = 0.0;        // |lhs - rhs| / max(lhs, 1e-12)
};
Lemma1Report lemma1_identity_check(const RadialProfile& phi, double t, const ConeParams& cone,
                                   double R, int order = 8);

struct VariationReport {
    double t = 0.0;
    double delta_p = 0.0;        // P(F;H_R) - P(K;H_R)
    double vol_sym_diff = 0.0;   // |K Delta F|
    double dist_volume = 0.0;    // int_{K Delta F} dist(z, M)
    double alpha = 0.0;          // |K Delta F| / R^m
    double delta = 0.0;          // delta_p / R^(m-1)
    double ratio = 0.0;          // alpha^2 / delta (0 when delta = 0)
    bool stability_pass = false; // alpha^2 <= C delta
    bool dist_chain_pass = false;  // delta_p >= c_{k,h}/R^2 * dist_volume
};
VariationReport theorem1_check(const RadialProfile& phi, double t, const ConeParams& cone,
                               double R);

}  // namespace lawson
