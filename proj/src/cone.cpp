#include "lawson/cone.hpp"

#include <cmath>

namespace lawson {

std::vector<ConeParams> certified_cones() {
    return {ConeParams(5, 3), ConeParams(7, 2), ConeParams(8, 2),
            ConeParams(9, 2), ConeParams(10, 2), ConeParams(11, 2)};
}

std::vector<ConeParams> certified_cones_both_orders() {
    std::vector<ConeParams> out;
    for (const auto& c : certified_cones()) {
        out.push_back(c);
        out.push_back(c.swapped());
    }
    return out;
}

ReducedPoint make_reduced(double r_x, double r_y, const ConeParams& cone) {
    if (r_x < 0.0 || r_y < 0.0) throw std::invalid_argument("make_reduced: negative radius");
    ReducedPoint p;
    p.r_x = r_x;
    p.r_y = r_y;
    p.u = (cone.h - 1) * r_x * r_x;
    p.v = (cone.k - 1) * r_y * r_y;
    const double scale = std::max(p.u, p.v);
    if (std::abs(p.u - p.v) <= kRegionTol * scale) {
        p.region = Region::OnCone;
    } else {
        p.region = p.u < p.v ? Region::InK : Region::InKComplement;
    }
    return p;
}

ReducedPoint reduce(const AmbientPoint& p, const ConeParams& cone) {
    if (static_cast<int>(p.x.size()) != cone.k || static_cast<int>(p.y.size()) != cone.h)
        throw std::invalid_argument("reduce: ambient dimensions do not match cone");
    double sx = 0.0, sy = 0.0;
    for (double c : p.x) sx += c * c;
    for (double c : p.y) sy += c * c;
    return make_reduced(std::sqrt(sx), std::sqrt(sy), cone);
}

double dist_to_cone(const ReducedPoint& p, const ConeParams& cone) {
    return std::abs(std::sqrt(p.u) - std::sqrt(p.v)) / std::sqrt(static_cast<double>(cone.m() - 2));
}

double p_function(const ReducedPoint& p, const ConeParams& cone) {
    return std::abs(p.r_x / std::sqrt(static_cast<double>(cone.k - 1)) -
                    p.r_y / std::sqrt(static_cast<double>(cone.h - 1)));
}

double l_constant(const ConeParams& cone) {
    return std::sqrt(1.0 / (cone.h - 1) + 1.0 / (cone.k - 1));
}

double unit_ball_volume(int n) {
    if (n < 1) throw std::invalid_argument("unit_ball_volume: need n >= 1");
    return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double second_fundamental_norm_sq(const ReducedPoint& p, const ConeParams& cone) {
    if (p.is_apex()) throw ApexError("second_fundamental_norm_sq: singular apex");
    if (p.region != Region::OnCone)
        throw std::invalid_argument("second_fundamental_norm_sq: point not on the cone");
    return static_cast<double>(cone.m() - 2) / p.norm_sq();
}

double link_area(const ConeParams& cone) {
    const int k = cone.k, h = cone.h, m = cone.m();
    const double a = std::sqrt(static_cast<double>(k - 1) / (m - 2));
    const double b = std::sqrt(static_cast<double>(h - 1) / (m - 2));
    return k * unit_ball_volume(k) * std::pow(a, k - 1) *
           h * unit_ball_volume(h) * std::pow(b, h - 1);
}

ProfileDirection cone_profile_direction(const ConeParams& cone) {
    const int m = cone.m();
    return {std::sqrt(static_cast<double>(cone.k - 1) / (m - 2)),
            std::sqrt(static_cast<double>(cone.h - 1) / (m - 2))};
}

ProfileDirection cone_profile_normal(const ConeParams& cone) {
    const auto e = cone_profile_direction(cone);
    return {e.along_y, -e.along_x};
}

}  // namespace lawson
