#include <doctest.h>

#include <cmath>
#include <vector>

#include "lawson/cone.hpp"
#include "lawson/constants_chain.hpp"
#include "lawson/errors.hpp"
#include "lawson/rng.hpp"
#include "lawson/variation.hpp"

using namespace lawson;

namespace {

// Uniform point in the unit n-ball via normalized Gaussian times U^(1/n).
std::vector<double> ball_point(Rng& rng, int n, double radius) {
    std::vector<double> v(static_cast<std::size_t>(n));
    double nsq = 0.0;
    for (auto& c : v) {
        c = rng.normal();
        nsq += c * c;
    }
    const double r = radius * std::pow(rng.uniform01(), 1.0 / n) / std::sqrt(nsq);
    for (auto& c : v) c *= r;
    return v;
}

// Monte Carlo estimate of H^{m-1}(M cap H_R) via thin-shell volumes at two
// widths with Richardson extrapolation; returns (estimate, sigma).
std::pair<double, double> cone_area_mc(const ConeParams& cone, double R, double w,
                                       std::uint64_t seed, int samples) {
    const double vol_hr = unit_ball_volume(cone.k) * unit_ball_volume(cone.h) *
                          std::pow(R, cone.m());
    const auto shell_fraction = [&](double width, std::uint64_t s) {
        Rng rng(s);
        int hits = 0;
        for (int i = 0; i < samples; ++i) {
            const auto x = ball_point(rng, cone.k, R);
            const auto y = ball_point(rng, cone.h, R);
            double sx = 0.0, sy = 0.0;
            for (double c : x) sx += c * c;
            for (double c : y) sy += c * c;
            const ReducedPoint p = make_reduced(std::sqrt(sx), std::sqrt(sy), cone);
            if (dist_to_cone(p, cone) < width) ++hits;
        }
        const double frac = static_cast<double>(hits) / samples;
        const double sigma = std::sqrt(std::max(frac * (1.0 - frac), 1e-12) / samples);
        return std::pair<double, double>{frac, sigma};
    };
    const auto [f1, s1] = shell_fraction(w, seed);
    const auto [f2, s2] = shell_fraction(0.5 * w, seed + 1);
    const double a1 = vol_hr * f1 / (2.0 * w);
    const double a2 = vol_hr * f2 / w;
    const double est = 2.0 * a2 - a1;  // kills the O(w) edge bias
    const double sig =
        vol_hr * std::sqrt(4.0 * (s2 / w) * (s2 / w) + (s1 / (2.0 * w)) * (s1 / (2.0 * w)));
    return {est, sig};
}

// Sutherland-Hodgman clip of a polygon against a half plane n.p <= c.
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, double nx, double ny, double c) {
    std::vector<Vec2> out;
    const auto inside = [&](Vec2 p) { return nx * p.x + ny * p.y <= c; };
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 a = poly[i], b = poly[(i + 1) % poly.size()];
        const bool ia = inside(a), ib = inside(b);
        if (ia) out.push_back(a);
        if (ia != ib) {
            const double da = nx * a.x + ny * a.y - c;
            const double db = nx * b.x + ny * b.y - c;
            const double t = da / (da - db);
            out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("axisym_perimeter: cone area against the Monte Carlo shell oracle") {
    const ConeParams cone(5, 3);  // m = 8
    const double R = 1.0;
    const ProfileCurve line = cone_line_curve(cone, 10.0);
    const double quad = axisym_perimeter(line, R);
    const auto [mc, sigma] = cone_area_mc(cone, R, 0.04, 2024, 1500000);
    CHECK(std::abs(quad - mc) <= 3.0 * sigma);
    // Closed form inside |z| <= 1 portion: link_area * s^{m-1}/(m-1) for the
    // segment up to the window exit.
    const auto e = cone_profile_direction(cone);
    const double s_exit = R / std::max(e.along_x, e.along_y);
    const double closed = link_area(cone) * std::pow(s_exit, cone.m() - 1) / (cone.m() - 1);
    CHECK(quad == doctest::Approx(closed).epsilon(1e-12));
}

TEST_CASE("axisym_perimeter: degenerate curve, dilation, quarter-plane guard") {
    const ConeParams cone(7, 2);
    const ProfileCurve degenerate{{{0.5, 0.5}, {0.5, 0.5}}, cone, 0.0, 0.0};
    CHECK(axisym_perimeter(degenerate, 1.0) == 0.0);

    const ProfileCurve line = cone_line_curve(cone, 10.0);
    const double lam = 1.3;
    ProfileCurve scaled = line;
    for (auto& p : scaled.pts) {
        p.x *= lam;
        p.y *= lam;
    }
    CHECK(axisym_perimeter(scaled, lam * 1.0) ==
          doctest::Approx(std::pow(lam, cone.m() - 1) * axisym_perimeter(line, 1.0))
              .epsilon(1e-12));

    const ProfileCurve bad{{{0.1, 0.1}, {-0.1, 0.2}}, cone, 0.0, 0.0};
    CHECK_THROWS_AS(axisym_perimeter(bad, 1.0), std::invalid_argument);
}

TEST_CASE("axisym_volume_polygon: window volume and dilation") {
    for (const auto& cone : {ConeParams(5, 3), ConeParams(9, 2)}) {
        const double R = 0.8;
        const std::vector<Vec2> window{{0, 0}, {R, 0}, {R, R}, {0, R}};
        const double vol = axisym_volume_polygon(window, cone);
        const double expected = unit_ball_volume(cone.k) * unit_ball_volume(cone.h) *
                                std::pow(R, cone.m());
        CHECK(vol == doctest::Approx(expected).epsilon(1e-12));
        std::vector<Vec2> scaled = window;
        const double lam = 1.5;
        for (auto& p : scaled) {
            p.x *= lam;
            p.y *= lam;
        }
        CHECK(axisym_volume_polygon(scaled, cone) ==
              doctest::Approx(vol * std::pow(lam, cone.m())).epsilon(1e-12));
    }
}

TEST_CASE("slab region via polygon clipping matches slab_volume") {
    for (const auto& cone : {ConeParams(5, 3), ConeParams(7, 2), ConeParams(2, 9)}) {
        const double R = 1.0;
        for (double eps : {0.05, 0.2}) {
            // {p < eps} = {|nu . z| < eps/l}; clip the window square.
            const auto nu = cone_profile_normal(cone);
            const double half_width = eps / l_constant(cone);
            std::vector<Vec2> poly{{0, 0}, {R, 0}, {R, R}, {0, R}};
            poly = clip_halfplane(poly, nu.along_x, nu.along_y, half_width);
            poly = clip_halfplane(poly, -nu.along_x, -nu.along_y, half_width);
            REQUIRE(poly.size() >= 3);
            const double via_polygon = axisym_volume_polygon(poly, cone);
            CHECK(via_polygon == doctest::Approx(slab_volume(cone, R, eps)).epsilon(1e-10));
        }
    }
}

TEST_CASE("normal_graph: construction basics") {
    const ConeParams cone(5, 3);
    const RadialProfile phi = RadialProfile::sine_bump(0.3, 0.7, 64);
    const auto e = cone_profile_direction(cone);

    const ProfileCurve flat = normal_graph(phi, 0.0, cone, 1.0);
    for (std::size_t i = 1; i + 1 < flat.pts.size(); ++i) {
        const Vec2 p = flat.pts[i];
        CHECK(p.y * e.along_x == doctest::Approx(p.x * e.along_y).epsilon(1e-14));
    }

    // Sign reflection: graph(t) + graph(-t) = 2 * line.
    const ProfileCurve plus = normal_graph(phi, 0.05, cone, 1.0);
    const ProfileCurve minus = normal_graph(phi, -0.05, cone, 1.0);
    for (std::size_t i = 1; i + 1 < plus.pts.size(); ++i) {
        const double sx = 0.5 * (plus.pts[i].x + minus.pts[i].x);
        const double sy = 0.5 * (plus.pts[i].y + minus.pts[i].y);
        CHECK(sy * e.along_x == doctest::Approx(sx * e.along_y).epsilon(1e-14));
    }

    CHECK_THROWS_AS(normal_graph(phi, 15.0, cone, 1.0), EmbeddednessError);
}

TEST_CASE("symmetric difference volume: strip vs polygon routes and the t^2 law") {
    const ConeParams cone(7, 2);
    const RadialProfile phi = RadialProfile::sine_bump(0.3, 0.7, 256);
    const auto e = cone_profile_direction(cone);
    const auto nu = cone_profile_normal(cone);
    for (double t : {0.01, 0.05}) {
        const double strip = strip_integral(phi, t, cone, [](Vec2, double) { return 1.0; });
        // Closed polygon: graph nodes forward, then back along the line.
        std::vector<Vec2> poly;
        for (std::size_t i = 0; i < phi.grid.size(); ++i) {
            const double s = phi.grid[i], off = t * phi.values[i];
            poly.push_back({s * e.along_x + off * nu.along_x, s * e.along_y + off * nu.along_y});
        }
        for (std::size_t i = phi.grid.size(); i-- > 0;) {
            const double s = phi.grid[i];
            poly.push_back({s * e.along_x, s * e.along_y});
        }
        const double polygon = axisym_volume_polygon(poly, cone);
        CHECK(strip == doctest::Approx(polygon).epsilon(1e-10));
    }
    // int_{K Delta F} dist = (t^2/2) int phi^2 dH (1 + O(t)).
    const double t = 0.005;
    const double dist_strip = strip_integral(phi, t, cone, [&](Vec2 p, double) {
        return dist_to_cone(make_reduced(p.x, p.y, cone), cone);
    });
    // Compare against (t^2/2) * link-area-weighted int phi^2 s^{m-2} ds.
    double n_exact = 0.0;
    {
        const int m = cone.m();
        for (std::size_t i = 0; i + 1 < phi.grid.size(); ++i) {
            const double a = phi.grid[i], b = phi.grid[i + 1];
            const int steps = 64;
            for (int q = 0; q < steps; ++q) {
                const double s0 = a + (b - a) * q / steps, s1 = a + (b - a) * (q + 1) / steps;
                const double mid = 0.5 * (s0 + s1);
                const double val = phi.eval(mid);
                n_exact += val * val * std::pow(mid, m - 2) * (s1 - s0);
            }
        }
        n_exact *= link_area(cone);
    }
    CHECK(dist_strip == doctest::Approx(0.5 * t * t * n_exact).epsilon(5e-3));
}

TEST_CASE("lemma 1 identity: zero at t = 0, tight at small t, gap shrinks on refinement") {
    for (const auto& cone : certified_cones()) {
        const RadialProfile phi = RadialProfile::sine_bump(0.3, 0.7, 256);
        CHECK(perimeter_increment(phi, 0.0, cone, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
        for (double t : {0.01, 0.02, 0.05}) {
            const Lemma1Report rep = lemma1_identity_check(phi, t, cone, 1.0);
            CHECK(rep.volume_term >= 0.0);
            CHECK(rep.boundary_term >= 0.0);
            CHECK(rep.lhs > 0.0);
            CHECK(rep.rel_gap <= 1e-3);
        }
        // Mesh refinement at a deliberately low quadrature order, where the
        // truncation error is visible: the gap drops fourth order.
        const RadialProfile coarse128 = RadialProfile::sine_bump(0.3, 0.7, 128);
        const RadialProfile fine256 = RadialProfile::sine_bump(0.3, 0.7, 256);
        const Lemma1Report coarse_rep = lemma1_identity_check(coarse128, 0.02, cone, 1.0, 2);
        const Lemma1Report fine_rep = lemma1_identity_check(fine256, 0.02, cone, 1.0, 2);
        CHECK(fine_rep.rel_gap <= 0.5 * coarse_rep.rel_gap);
    }
}

TEST_CASE("perimeter increment is nonnegative: local minimality on random competitors") {
    Rng rng(97);
    for (const auto& cone : certified_cones_both_orders()) {
        for (int trial = 0; trial < 6; ++trial) {
            const double a = rng.uniform(0.2, 0.4);
            const double b = a + rng.uniform(0.15, 0.4);
            const int which = static_cast<int>(rng.uniform(0.0, 3.0));
            const RadialProfile phi = which == 0   ? RadialProfile::sine_bump(a, b, 128)
                                      : which == 1 ? RadialProfile::smooth_bump(a, b, 128)
                                                   : RadialProfile::hat(a, b, 128);
            const double t = rng.uniform(-0.05, 0.05);
            CHECK(perimeter_increment(phi, t, cone, 1.0) >= -1e-12);
        }
    }
}

TEST_CASE("theorem1_check: quadratic stability with the explicit constant") {
    for (const auto& cone : certified_cones()) {
        const RadialProfile phi = RadialProfile::smooth_bump(0.3, 0.7, 256);
        for (double t : {0.01, 0.05}) {
            const VariationReport rep = theorem1_check(phi, t, cone, 1.0);
            CHECK(rep.stability_pass);
            CHECK(rep.dist_chain_pass);
            CHECK(rep.delta_p >= 0.0);
            CHECK(rep.vol_sym_diff >= 0.0);
            // The observed sharpness is astronomically below C.
            CHECK(rep.ratio <= theorem1_constant_value() / 1e10);
        }
    }
}

TEST_CASE("theorem1_check: alpha and delta are dilation invariant") {
    const ConeParams cone(5, 3);
    const RadialProfile phi = RadialProfile::sine_bump(0.3, 0.7, 256);
    const double lam = 2.4;
    std::vector<double> scaled_grid = phi.grid;
    for (double& s : scaled_grid) s *= lam;
    const RadialProfile phi_scaled(scaled_grid, phi.values);
    const VariationReport base = theorem1_check(phi, 0.02, cone, 1.0);
    const VariationReport big = theorem1_check(phi_scaled, 0.02 * lam, cone, lam);
    CHECK(big.alpha == doctest::Approx(base.alpha).epsilon(1e-11));
    CHECK(big.delta == doctest::Approx(base.delta).epsilon(1e-11));
}

TEST_CASE("support outside the window is rejected") {
    const ConeParams cone(5, 3);
    const RadialProfile phi = RadialProfile::sine_bump(0.8, 1.4, 64);
    CHECK_THROWS_AS(perimeter_increment(phi, 0.01, cone, 1.0), std::invalid_argument);
}
