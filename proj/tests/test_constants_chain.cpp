#include <doctest.h>

#include <cmath>

#include "lawson/certification.hpp"
#include "lawson/cone.hpp"
#include "lawson/constants_chain.hpp"
#include "lawson/quadrature.hpp"
#include "lawson/rng.hpp"
#include "lawson/variation.hpp"

using namespace lawson;

TEST_CASE("slab_volume: limits and monotonicity") {
    for (const auto& cone : {ConeParams(5, 3), ConeParams(2, 7)}) {
        const double R = 1.0;
        CHECK(slab_volume(cone, R, 0.0) == 0.0);
        const double full = unit_ball_volume(cone.k) * unit_ball_volume(cone.h);
        CHECK(slab_volume(cone, R, 1e9) == doctest::Approx(full).epsilon(1e-12));
        double prev = 0.0;
        for (double eps : {0.01, 0.05, 0.1, 0.5, 2.0}) {
            const double v = slab_volume(cone, R, eps);
            CHECK(v >= prev);
            prev = v;
        }
        CHECK(slab_volume(cone, 2.0, 0.1) > slab_volume(cone, 1.0, 0.1));
        // Dilation: |H_{lam R} cap {p < lam eps}| = lam^m |H_R cap {p < eps}|.
        CHECK(slab_volume(cone, 2.0, 0.2) ==
              doctest::Approx(std::pow(2.0, cone.m()) * slab_volume(cone, 1.0, 0.1))
                  .epsilon(1e-12));
    }
}

TEST_CASE("slab_volume: Monte Carlo cross-check in ambient dimension 9") {
    const ConeParams cone(2, 7);
    const double R = 1.0, eps = 0.1;
    const double quad = slab_volume(cone, R, eps);
    Rng rng(4242);
    const int n = 400000;
    int hits = 0;
    for (int i = 0; i < n; ++i) {
        // Radii of uniform points in B^2_R x B^7_R: R * U^(1/dim).
        const double rx = R * std::pow(rng.uniform01(), 1.0 / 2.0);
        const double ry = R * std::pow(rng.uniform01(), 1.0 / 7.0);
        const ReducedPoint p = make_reduced(rx, ry, cone);
        if (p_function(p, cone) < eps) ++hits;
    }
    const double frac = static_cast<double>(hits) / n;
    const double vol_hr = unit_ball_volume(2) * unit_ball_volume(7);
    const double mc = vol_hr * frac;
    const double sigma = vol_hr * std::sqrt(frac * (1.0 - frac) / n);
    CHECK(std::abs(quad - mc) <= 3.0 * sigma);
}

TEST_CASE("slab_bound_paper: parts sum to the total; the bound dominates") {
    for (const auto& cone : certified_cones_both_orders()) {
        for (double eps : {0.001, 0.003162, 0.01, 0.03162, 0.1, 0.3162}) {
            const SlabBoundParts b = slab_bound_paper(cone, 1.0, eps);
            CHECK(b.total == doctest::Approx(b.inner + b.outer).epsilon(1e-12));
            CHECK(slab_volume(cone, 1.0, eps) <= b.total * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("slab inner part dominates the exact inner integral") {
    // Exact inner part: integral over |y| <= eps sqrt(h-1) of the x-shell.
    for (const auto& cone : {ConeParams(7, 2), ConeParams(5, 3), ConeParams(2, 7)}) {
        const int k = cone.k, h = cone.h;
        const double eps = 0.1, R = 1.0;
        const double sk = std::sqrt(static_cast<double>(k - 1));
        const double sh = std::sqrt(static_cast<double>(h - 1));
        const auto& gl = GaussLegendre::order(16);
        const double exact_inner = gl.integrate_composite(0.0, eps * sh, 256, [&](double ry) {
            const double hi = std::min(R, sk * (ry / sh + eps));
            const double lo = std::max(0.0, sk * (ry / sh - eps));
            return h * unit_ball_volume(h) * std::pow(ry, h - 1) * unit_ball_volume(k) *
                   (std::pow(hi, k) - std::pow(lo, k));
        });
        const SlabBoundParts b = slab_bound_paper(cone, R, eps);
        CHECK(exact_inner <= b.inner * (1.0 + 1e-12));
    }
}

TEST_CASE("elementary inequality (1+t)^k - (1-t)^k <= 2^k t") {
    for (int k = 2; k <= 11; ++k) CHECK(elementary_power_inequality_holds(k));
}

TEST_CASE("alpha_bound_chain: boundary, zero, AM-GM equality, gate") {
    const ConeParams cone(7, 2);
    const AlphaBoundResult at36 = alpha_bound_chain(cone, 1.0, 36.0);
    CHECK(at36.volume_regime);
    CHECK(at36.eps_opt == doctest::Approx(1.0));
    CHECK(at36.alpha_bound == doctest::Approx(36.0));

    const AlphaBoundResult just_below = alpha_bound_chain(cone, 1.0, 36.0 - 1e-9);
    CHECK(!just_below.volume_regime);
    CHECK(just_below.eps_opt == doctest::Approx(1.0).epsilon(1e-9));
    // Both regimes give valid bounds at the boundary; the eps-route is larger.
    CHECK(just_below.alpha_bound >= at36.alpha_bound);

    const AlphaBoundResult zero = alpha_bound_chain(cone, 1.0, 0.0);
    CHECK(zero.alpha_bound == 0.0);

    Rng rng(31337);
    for (int i = 0; i < 200; ++i) {
        const double delta = rng.uniform(1e-8, 36.0);
        const double R = rng.uniform(0.1, 10.0);
        const AlphaBoundResult res = alpha_bound_chain(cone, R, delta);
        CHECK(res.eps_gate);
        CHECK(std::abs(res.amgm_lhs / res.amgm_rhs - 1.0) < 1e-14);
        // AM-GM: away from eps_opt the sum is strictly larger.
        const double eps_off = res.eps_opt * 1.5;
        CHECK(R * delta / eps_off + 36.0 * eps_off / R > res.amgm_rhs);
    }
    CHECK(std::pow(35.0, 1.0 / 13.0) > 1.0);
    CHECK_THROWS_AS(alpha_bound_chain(cone, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("theorem1_constant: exact value and consistency") {
    const Rational C = theorem1_constant();
    CHECK(C == Rational(7056) * rat_pow(Rational(10), 20));
    CHECK(theorem1_constant_value() == doctest::Approx(7.056e23).epsilon(1e-15));
    const ConeParams cone(5, 3);
    for (double delta = 0.5; delta <= 100.0; delta += 0.5) {
        const AlphaBoundResult res = alpha_bound_chain(cone, 1.0, delta);
        CHECK(res.alpha_bound * res.alpha_bound <=
              theorem1_constant_value() * delta * (1.0 + 1e-12));
    }
}

TEST_CASE("uniform constant dominances, exactly") {
    for (const auto& cone : certified_cones_both_orders()) {
        const ConstantDerivation d = constant_derivation(cone);
        CHECK(d.perimeter_ok);
        CHECK(d.slab_ok);
    }
    // omega_k omega_h <= 36 for all certified pairs.
    for (const auto& cone : certified_cones()) {
        CHECK(unit_ball_volume(cone.k) * unit_ball_volume(cone.h) <= 36.0);
    }
}

TEST_CASE("full volume chain on concrete competitors") {
    // |K Delta F| <= l R^2/(c eps) DeltaP + |H_R cap {p < eps}|.
    for (const auto& cone : {ConeParams(5, 3), ConeParams(7, 2)}) {
        const RadialProfile phi = RadialProfile::sine_bump(0.3, 0.7, 256);
        const double R = 1.0;
        const double l = l_constant(cone);
        const double c = claimed_constant(cone).approx();
        for (double t : {0.01, 0.05}) {
            const VariationReport rep = theorem1_check(phi, t, cone, R);
            for (double eps : {0.001, 0.01, 0.1}) {
                const double rhs =
                    l * R * R / (c * eps) * rep.delta_p + slab_volume(cone, R, eps);
                CHECK(rep.vol_sym_diff <= rhs);
            }
        }
    }
}
