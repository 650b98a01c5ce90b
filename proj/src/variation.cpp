#include "lawson/variation.hpp"

#include <algorithm>
#include <cmath>

#include "lawson/calibration.hpp"
#include "lawson/certification.hpp"
#include "lawson/constants_chain.hpp"
#include "lawson/errors.hpp"
#include "lawson/quadrature.hpp"

namespace lawson {

namespace {

double weight(Vec2 p, const ConeParams& cone) {
    const int k = cone.k, h = cone.h;
    return k * unit_ball_volume(k) * ipow(p.x, static_cast<unsigned>(k - 1)) *
           h * unit_ball_volume(h) * ipow(p.y, static_cast<unsigned>(h - 1));
}

// Clip the segment a + tau (b - a), tau in [0,1], to {x <= R, y <= R}.
// Returns false if the clipped interval is empty.
bool clip_to_window(Vec2 a, Vec2 b, double R, double& t0, double& t1) {
    t0 = 0.0;
    t1 = 1.0;
    const double dx[2] = {b.x - a.x, b.y - a.y};
    const double px[2] = {a.x, a.y};
    for (int c = 0; c < 2; ++c) {
        const double d = dx[c], p = px[c];
        if (d == 0.0) {
            if (p > R) return false;
        } else {
            const double tr = (R - p) / d;
            if (d > 0.0) t1 = std::min(t1, tr);
            else t0 = std::max(t0, tr);
        }
    }
    return t0 < t1;
}

void check_quarter_plane(const ProfileCurve& c) {
    for (const auto& p : c.pts)
        if (p.x < 0.0 || p.y < 0.0)
            throw std::invalid_argument("axisym_perimeter: curve leaves the quarter plane");
}

}  // namespace

ProfileCurve cone_line_curve(const ConeParams& cone, double s_end) {
    const auto e = cone_profile_direction(cone);
    ProfileCurve c{{{0.0, 0.0}, {s_end * e.along_x, s_end * e.along_y}}, cone, 0.0, 0.0};
    return c;
}

ProfileCurve normal_graph(const RadialProfile& phi, double t, const ConeParams& cone, double R) {
    const auto e = cone_profile_direction(cone);
    const auto nu = cone_profile_normal(cone);
    const double exit_s = R / std::min(e.along_x, e.along_y);  // beyond the window for sure
    const double s_end = std::max(1.5 * exit_s, 2.0 * phi.support_hi());
    ProfileCurve c{{}, cone, phi.support_lo(), phi.support_hi()};
    c.pts.push_back({0.0, 0.0});
    for (std::size_t i = 0; i < phi.grid.size(); ++i) {
        const double s = phi.grid[i];
        const double off = t * phi.values[i];
        const Vec2 p{s * e.along_x + off * nu.along_x, s * e.along_y + off * nu.along_y};
        if (p.x <= 0.0 || p.y <= 0.0)
            throw EmbeddednessError("normal_graph: curve leaves the open quarter plane");
        c.pts.push_back(p);
    }
    c.pts.push_back({s_end * e.along_x, s_end * e.along_y});
    return c;
}

double axisym_perimeter_weighted(const ProfileCurve& c, double R,
                                 const std::function<double(Vec2)>& density) {
    check_quarter_plane(c);
    const auto& gl = GaussLegendre::order(12);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < c.pts.size(); ++i) {
        const Vec2 a = c.pts[i], b = c.pts[i + 1];
        double t0, t1;
        if (!clip_to_window(a, b, R, t0, t1)) continue;
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        if (len == 0.0) continue;
        acc += gl.integrate(t0, t1, [&](double tau) {
            const Vec2 p{a.x + tau * (b.x - a.x), a.y + tau * (b.y - a.y)};
            return weight(p, c.cone) * density(p);
        }) * len;
    }
    return acc;
}

double axisym_perimeter(const ProfileCurve& c, double R) {
    check_quarter_plane(c);
    const auto& gl = GaussLegendre::order(8);  // exact for the polynomial weight
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < c.pts.size(); ++i) {
        const Vec2 a = c.pts[i], b = c.pts[i + 1];
        double t0, t1;
        if (!clip_to_window(a, b, R, t0, t1)) continue;
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        if (len == 0.0) continue;
        acc += gl.integrate(t0, t1, [&](double tau) {
            const Vec2 p{a.x + tau * (b.x - a.x), a.y + tau * (b.y - a.y)};
            return weight(p, c.cone);
        }) * len;
    }
    return acc;
}

double axisym_volume_polygon(const std::vector<Vec2>& polygon, const ConeParams& cone) {
    if (polygon.size() < 3) throw std::invalid_argument("axisym_volume_polygon: need a polygon");
    const int k = cone.k, h = cone.h;
    const double ck = unit_ball_volume(k);
    const double ch = h * unit_ball_volume(h);
    const auto& gl = GaussLegendre::order(8);
    // Green's theorem with W = w_k x^k * h w_h y^(h-1), dW/dx = weight.
    double acc = 0.0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Vec2 a = polygon[i], b = polygon[(i + 1) % polygon.size()];
        const double dy = b.y - a.y;
        if (dy == 0.0) continue;
        acc += gl.integrate(0.0, 1.0, [&](double tau) {
            const Vec2 p{a.x + tau * (b.x - a.x), a.y + tau * (b.y - a.y)};
            return ck * ipow(p.x, static_cast<unsigned>(k)) *
                   ch * ipow(p.y, static_cast<unsigned>(h - 1));
        }) * dy;
    }
    return std::abs(acc);
}

double strip_integral(const RadialProfile& phi, double t, const ConeParams& cone,
                      const std::function<double(Vec2, double)>& density, int order,
                      int order_inner) {
    const auto e = cone_profile_direction(cone);
    const auto nu = cone_profile_normal(cone);
    const auto& gl = GaussLegendre::order(static_cast<std::size_t>(order));
    const auto& gli = GaussLegendre::order(static_cast<std::size_t>(order_inner));
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < phi.grid.size(); ++i) {
        acc += gl.integrate(phi.grid[i], phi.grid[i + 1], [&](double s) {
            const double extent = t * phi.eval(s);
            if (extent == 0.0) return 0.0;
            const double span = std::abs(extent);
            double inner = 0.0;
            for (std::size_t q = 0; q < gli.nodes.size(); ++q) {
                const double sigma = 0.5 * (1.0 + gli.nodes[q]);
                const double tau = extent * sigma;
                const Vec2 p{s * e.along_x + tau * nu.along_x,
                             s * e.along_y + tau * nu.along_y};
                inner += 0.5 * gli.weights[q] * weight(p, cone) * density(p, tau);
            }
            return span * inner;
        });
    }
    return acc;
}

namespace {

void check_support_inside_window(const ProfileCurve& graph, double R) {
    // Only the deviating part must stay strictly inside the window; the
    // first and last points are the apex and the far tail.
    for (std::size_t i = 1; i + 1 < graph.pts.size(); ++i) {
        if (graph.pts[i].x >= R || graph.pts[i].y >= R)
            throw std::invalid_argument(
                "competitor support is not compactly inside the window H_R");
    }
}

}  // namespace

double perimeter_increment(const RadialProfile& phi, double t, const ConeParams& cone, double R,
                           int order) {
    const ProfileCurve graph = normal_graph(phi, t, cone, R);
    check_support_inside_window(graph, R);
    const auto e = cone_profile_direction(cone);
    const auto& gl = GaussLegendre::order(static_cast<std::size_t>(order));
    // Graph part over the support: nodes 1 .. grid.size() of the polyline.
    double p_graph = 0.0;
    for (std::size_t i = 1; i + 2 < graph.pts.size(); ++i) {
        const Vec2 a = graph.pts[i], b = graph.pts[i + 1];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        p_graph += gl.integrate(0.0, 1.0, [&](double tau) {
            const Vec2 p{a.x + tau * (b.x - a.x), a.y + tau * (b.y - a.y)};
            return weight(p, cone);
        }) * len;
    }
    // Line part over the same support, composite over the same cells.
    double p_line = 0.0;
    for (std::size_t i = 0; i + 1 < phi.grid.size(); ++i) {
        p_line += gl.integrate(phi.grid[i], phi.grid[i + 1], [&](double s) {
            return weight({s * e.along_x, s * e.along_y}, cone);
        });
    }
    return p_graph - p_line;
}

Lemma1Report lemma1_identity_check(const RadialProfile& phi, double t, const ConeParams& cone,
                                   double R, int order) {
    Lemma1Report rep;
    rep.lhs = perimeter_increment(phi, t, cone, R, order);
    rep.volume_term = strip_integral(
        phi, t, cone,
        [&](Vec2 p, double) {
            const ReducedPoint rp = make_reduced(p.x, p.y, cone);
            return std::abs(g_field(rp, cone).div_g);
        },
        order);
    // Boundary integrand 1 - g . nu_F vanishes identically on the parts of
    // dF that coincide with the cone, so only the graph segments contribute.
    const ProfileCurve graph = normal_graph(phi, t, cone, R);
    const auto& gl = GaussLegendre::order(static_cast<std::size_t>(order));
    double boundary = 0.0;
    for (std::size_t i = 1; i + 2 < graph.pts.size(); ++i) {
        const Vec2 a = graph.pts[i], b = graph.pts[i + 1];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        if (len == 0.0) continue;
        const Vec2 tang{(b.x - a.x) / len, (b.y - a.y) / len};
        const Vec2 nu{tang.y, -tang.x};  // outward from F, matches nu_K at t = 0
        boundary += gl.integrate(0.0, 1.0, [&](double tau) {
            const Vec2 p{a.x + tau * (b.x - a.x), a.y + tau * (b.y - a.y)};
            const ReducedPoint rp = make_reduced(p.x, p.y, cone);
            const FieldSample f = g_field(rp, cone);
            const double gdotnu = f.g_x * nu.x + f.g_y * nu.y;
            return weight(p, cone) * (1.0 - gdotnu);
        }) * len;
    }
    rep.boundary_term = boundary;
    rep.rhs = rep.volume_term + rep.boundary_term;
    rep.rel_gap = std::abs(rep.lhs - rep.rhs) / std::max(rep.lhs, 1e-12);
    return rep;
}

VariationReport theorem1_check(const RadialProfile& phi, double t, const ConeParams& cone,
                               double R) {
    VariationReport rep;
    rep.t = t;
    rep.delta_p = perimeter_increment(phi, t, cone, R);
    rep.vol_sym_diff = strip_integral(phi, t, cone, [](Vec2, double) { return 1.0; });
    rep.dist_volume = strip_integral(phi, t, cone, [&](Vec2 p, double) {
        return dist_to_cone(make_reduced(p.x, p.y, cone), cone);
    });
    const int m = cone.m();
    rep.alpha = rep.vol_sym_diff / ipow(R, static_cast<unsigned>(m));
    rep.delta = rep.delta_p / ipow(R, static_cast<unsigned>(m - 1));
    rep.ratio = rep.delta > 0.0 ? rep.alpha * rep.alpha / rep.delta : 0.0;
    const double C = theorem1_constant_value();
    rep.stability_pass = rep.alpha * rep.alpha <= C * rep.delta;
    const double c_kh = claimed_constant(cone).approx();
    rep.dist_chain_pass = rep.delta_p >= c_kh / (R * R) * rep.dist_volume - 1e-12;
    return rep;
}

}  // namespace lawson
