#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "lawson/errors.hpp"

namespace lawson {

enum class Region { InK, OnCone, InKComplement };

inline const char* region_name(Region r) {
    switch (r) {
        case Region::InK: return "InK";
        case Region::OnCone: return "OnCone";
        default: return "InKComplement";
    }
}

// The Lawson cone pair (k, h), m = k + h.
//
// M_kh = { |x|/sqrt(k-1) = |y|/sqrt(h-1) } in R^k x R^h, boundary of
// K_kh = { |x|/sqrt(k-1) < |y|/sqrt(h-1) }.
struct ConeParams {
    int k = 0;
    int h = 0;

    ConeParams(int k_, int h_) : k(k_), h(h_) {
        if (k < 2 || h < 2) throw std::invalid_argument("ConeParams: need k, h >= 2");
    }

    int m() const { return k + h; }

    // True for the six pairs handled by this library's certified machinery,
    // in either ordering.
    bool certified() const {
        const int lo = std::min(k, h), hi = std::max(k, h);
        if (lo == 3 && hi == 5) return true;
        if (lo == 2 && hi >= 7 && hi <= 11) return true;
        return false;
    }

    ConeParams swapped() const { return ConeParams(h, k); }

    std::string name() const { return std::to_string(k) + "," + std::to_string(h); }

    bool operator==(const ConeParams& o) const { return k == o.k && h == o.h; }
};

// The six certified pairs in canonical (k, h) order as used in the source
// results: (5,3) and (k,2) for k = 7..11 correspond to (h,k) in S.
std::vector<ConeParams> certified_cones();

// Both orderings of every certified pair (12 cones).
std::vector<ConeParams> certified_cones_both_orders();

// Scale-reduced coordinates: u = (h-1) r_x^2, v = (k-1) r_y^2 with
// r_x = |x|, r_y = |y|. All calibration formulas live here.
struct ReducedPoint {
    double r_x = 0.0;
    double r_y = 0.0;
    double u = 0.0;
    double v = 0.0;
    Region region = Region::OnCone;

    double norm_sq() const { return r_x * r_x + r_y * r_y; }
    double norm() const { return std::sqrt(norm_sq()); }
    bool is_apex() const { return r_x == 0.0 && r_y == 0.0; }
};

struct AmbientPoint {
    std::vector<double> x;  // dimension k
    std::vector<double> y;  // dimension h
};

// Relative tolerance used to label u == v for floating inputs.
inline constexpr double kRegionTol = 1e-14;

ReducedPoint make_reduced(double r_x, double r_y, const ConeParams& cone);
ReducedPoint reduce(const AmbientPoint& p, const ConeParams& cone);

// Euclidean distance to the cone: |sqrt(u) - sqrt(v)| / sqrt(m - 2).
double dist_to_cone(const ReducedPoint& p, const ConeParams& cone);

// p(z) = | |x|/sqrt(k-1) - |y|/sqrt(h-1) |; equals l_constant * dist.
double p_function(const ReducedPoint& p, const ConeParams& cone);

// l = sqrt(1/(h-1) + 1/(k-1)).
double l_constant(const ConeParams& cone);

// Volume of the unit n-ball.
double unit_ball_volume(int n);

// |II|^2 of M_kh at a cone point, equal to (m-2)/|z|^2.
double second_fundamental_norm_sq(const ReducedPoint& p, const ConeParams& cone);

// (m-1)-area of M_kh intersect B_1, divided by 1/(m-1); i.e. the weighted
// length density along the profile line: H^{m-1}(M cap B_r) = link_area * r^{m-1}/(m-1).
double link_area(const ConeParams& cone);

// Unit direction of the cone's profile line in the (r_x, r_y) quarter plane.
// components: (sqrt((k-1)/(m-2)), sqrt((h-1)/(m-2))).
struct ProfileDirection {
    double along_x = 0.0;
    double along_y = 0.0;
};
ProfileDirection cone_profile_direction(const ConeParams& cone);

// Outward unit normal of K_kh restricted to the quarter plane (points out of K).
ProfileDirection cone_profile_normal(const ConeParams& cone);

}  // namespace lawson
