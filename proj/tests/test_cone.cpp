#include <doctest.h>

#include <cmath>
#include <vector>

#include "lawson/cone.hpp"
#include "lawson/errors.hpp"
#include "lawson/rng.hpp"

using namespace lawson;

namespace {

// 1-D ternary search for the distance from (r_x, r_y) to the profile line.
double dist_by_minimization(double r_x, double r_y, const ConeParams& cone) {
    const auto e = cone_profile_direction(cone);
    double lo = 0.0, hi = 10.0 * (r_x + r_y + 1.0);
    for (int it = 0; it < 300; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        const auto d = [&](double t) {
            return std::hypot(r_x - t * e.along_x, r_y - t * e.along_y);
        };
        if (d(m1) < d(m2)) hi = m2;
        else lo = m1;
    }
    return std::hypot(r_x - lo * e.along_x, r_y - lo * e.along_y);
}

}  // namespace

TEST_CASE("reduce: worked examples") {
    const ConeParams cone(5, 3);
    AmbientPoint p;
    p.x = {1, 0, 0, 0, 0};
    p.y = {2, 0, 0};
    const ReducedPoint r = reduce(p, cone);
    CHECK(r.u == doctest::Approx(2.0));
    CHECK(r.v == doctest::Approx(16.0));
    CHECK(r.region == Region::InK);

    p.x = {2, 0, 0, 0, 0};
    p.y = {std::sqrt(2.0), 0, 0};
    const ReducedPoint q = reduce(p, cone);
    CHECK(q.u == doctest::Approx(8.0));
    CHECK(q.v == doctest::Approx(8.0));
    CHECK(q.region == Region::OnCone);

    // (k,h) = (2,7): u = 6 |x|^2, v = |y|^2.
    const ConeParams c27(2, 7);
    AmbientPoint w;
    w.x = {3, 0};
    w.y = {100, 0, 0, 0, 0, 0, 0};
    const ReducedPoint s = reduce(w, c27);
    CHECK(s.u == doctest::Approx(6.0 * 9.0));
    CHECK(s.v == doctest::Approx(10000.0));
    CHECK(s.region == Region::InK);
}

TEST_CASE("reduce: region label against the sign oracle on random points") {
    Rng rng(7);
    for (const auto& cone : certified_cones_both_orders()) {
        for (int i = 0; i < 10000; ++i) {
            const double rx = rng.uniform(0.0, 2.0), ry = rng.uniform(0.0, 2.0);
            const ReducedPoint p = make_reduced(rx, ry, cone);
            const double sign = rx / std::sqrt(static_cast<double>(cone.k - 1)) -
                                ry / std::sqrt(static_cast<double>(cone.h - 1));
            if (p.region == Region::InK) CHECK(sign < 0.0);
            if (p.region == Region::InKComplement) CHECK(sign > 0.0);
        }
    }
}

TEST_CASE("dist_to_cone: examples and the minimization oracle") {
    const ConeParams cone(5, 3);
    CHECK(dist_to_cone(make_reduced(1.0, 1.0 / std::sqrt(2.0), cone), cone) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // r_x = 0, r_y = 1: u = 0, v = 4, dist = 2/sqrt(6).
    const ReducedPoint p = make_reduced(0.0, 1.0, cone);
    CHECK(dist_to_cone(p, cone) == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-14));
    CHECK(dist_to_cone(p, cone) == doctest::Approx(dist_by_minimization(0.0, 1.0, cone)).epsilon(1e-9));

    Rng rng(11);
    for (const auto& c : certified_cones()) {
        for (int i = 0; i < 100; ++i) {
            const double rx = rng.uniform(0.01, 2.0), ry = rng.uniform(0.01, 2.0);
            const double d = dist_to_cone(make_reduced(rx, ry, c), c);
            CHECK(d == doctest::Approx(dist_by_minimization(rx, ry, c)).epsilon(1e-8));
            // Degree-1 homogeneity.
            const double lam = rng.uniform(0.1, 5.0);
            CHECK(dist_to_cone(make_reduced(lam * rx, lam * ry, c), c) ==
                  doctest::Approx(lam * d).epsilon(1e-12));
        }
    }
}

TEST_CASE("p_function and l_constant") {
    const ConeParams c53(5, 3);
    CHECK(p_function(make_reduced(0.0, 1.0, c53), c53) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(l_constant(c53) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
    const ConeParams c27(2, 7);
    CHECK(l_constant(c27) == doctest::Approx(std::sqrt(7.0 / 6.0)).epsilon(1e-14));

    Rng rng(13);
    for (const auto& c : certified_cones_both_orders()) {
        const double l = l_constant(c);
        for (int i = 0; i < 10000; ++i) {
            const double rx = rng.uniform(0.0, 3.0), ry = rng.uniform(0.0, 3.0);
            const ReducedPoint p = make_reduced(rx, ry, c);
            const double lhs = p_function(p, c), rhs = l * dist_to_cone(p, c);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("unit_ball_volume: closed forms, recurrence, omega < 6") {
    CHECK(unit_ball_volume(2) == doctest::Approx(M_PI).epsilon(1e-15));
    CHECK(unit_ball_volume(4) == doctest::Approx(M_PI * M_PI / 2.0).epsilon(1e-14));
    for (int n = 3; n <= 13; ++n) {
        CHECK(unit_ball_volume(n) ==
              doctest::Approx(2.0 * M_PI / n * unit_ball_volume(n - 2)).epsilon(1e-14));
    }
    for (int j = 2; j <= 11; ++j) CHECK(unit_ball_volume(j) < 6.0);
    CHECK_THROWS_AS(unit_ball_volume(0), std::invalid_argument);
}

namespace {

// Finite-difference |II|^2 oracle: for the level set {u - v = 0}, project the
// Jacobian of the unit normal field onto the tangent space and take the
// squared Frobenius norm.
double second_fundamental_fd(const ConeParams& cone, double r_x, double r_y) {
    const int k = cone.k, h = cone.h, m = cone.m();
    std::vector<double> z(static_cast<std::size_t>(m), 0.0);
    z[0] = r_x;
    z[static_cast<std::size_t>(k)] = r_y;
    const auto normal = [&](const std::vector<double>& w) {
        // grad(u - v) = (2(h-1) x, -2(k-1) y), normalized.
        std::vector<double> g(static_cast<std::size_t>(m));
        double nsq = 0.0;
        for (int i = 0; i < k; ++i) {
            g[static_cast<std::size_t>(i)] = 2.0 * (h - 1) * w[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < h; ++i) {
            g[static_cast<std::size_t>(k + i)] = -2.0 * (k - 1) * w[static_cast<std::size_t>(k + i)];
        }
        for (double c : g) nsq += c * c;
        for (double& c : g) c /= std::sqrt(nsq);
        return g;
    };
    const double step = 1e-6;
    std::vector<std::vector<double>> dn(static_cast<std::size_t>(m),
                                        std::vector<double>(static_cast<std::size_t>(m)));
    for (int j = 0; j < m; ++j) {
        auto zp = z, zm = z;
        zp[static_cast<std::size_t>(j)] += step;
        zm[static_cast<std::size_t>(j)] -= step;
        const auto np = normal(zp), nm = normal(zm);
        for (int i = 0; i < m; ++i)
            dn[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (np[static_cast<std::size_t>(i)] - nm[static_cast<std::size_t>(i)]) / (2.0 * step);
    }
    const auto nu = normal(z);
    // P = I - nu nu^T; |II|^2 = |P Dn P|_F^2.
    double frob = 0.0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            double pij = 0.0;
            for (int a = 0; a < m; ++a) {
                for (int b = 0; b < m; ++b) {
                    const double pia = (i == a ? 1.0 : 0.0) - nu[static_cast<std::size_t>(i)] * nu[static_cast<std::size_t>(a)];
                    const double pbj = (b == j ? 1.0 : 0.0) - nu[static_cast<std::size_t>(b)] * nu[static_cast<std::size_t>(j)];
                    pij += pia * dn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * pbj;
                }
            }
            frob += pij * pij;
        }
    }
    return frob;
}

}  // namespace

TEST_CASE("second fundamental form norm against the finite-difference shape operator") {
    for (const auto& kh : std::vector<std::pair<int, int>>{{3, 5}, {2, 7}}) {
        const ConeParams cone(kh.first, kh.second);
        const auto e = cone_profile_direction(cone);
        const ReducedPoint p = make_reduced(e.along_x, e.along_y, cone);  // |z| = 1
        const double val = second_fundamental_norm_sq(p, cone);
        CHECK(val == doctest::Approx(static_cast<double>(cone.m() - 2)).epsilon(1e-14));
        CHECK(val == doctest::Approx(second_fundamental_fd(cone, e.along_x, e.along_y)).epsilon(1e-5));
        // Degree -2 homogeneity.
        const ReducedPoint p2 = make_reduced(2.0 * e.along_x, 2.0 * e.along_y, cone);
        CHECK(second_fundamental_norm_sq(p2, cone) == doctest::Approx(val / 4.0).epsilon(1e-14));
    }
    const ConeParams cone(3, 5);
    CHECK_THROWS_AS(second_fundamental_norm_sq(make_reduced(0.0, 0.0, cone), cone), ApexError);
}

TEST_CASE("swap symmetry: (k,h) and (x,y) swap exchanges u,v and flips regions") {
    Rng rng(17);
    for (const auto& cone : certified_cones()) {
        const ConeParams swapped = cone.swapped();
        for (int i = 0; i < 1000; ++i) {
            const double rx = rng.uniform(0.0, 2.0), ry = rng.uniform(0.0, 2.0);
            const ReducedPoint p = make_reduced(rx, ry, cone);
            const ReducedPoint q = make_reduced(ry, rx, swapped);
            CHECK(p.u == doctest::Approx(q.v).epsilon(1e-15));
            CHECK(p.v == doctest::Approx(q.u).epsilon(1e-15));
            if (p.region == Region::InK) CHECK(q.region == Region::InKComplement);
            if (p.region == Region::InKComplement) CHECK(q.region == Region::InK);
        }
    }
}

TEST_CASE("link area matches the weighted profile-line density") {
    // H^{m-1}(M cap B_1) = link_area / (m-1); checked against the definition
    // through the product of sphere areas at the unit-radius slice.
    const ConeParams cone(5, 3);
    const auto e = cone_profile_direction(cone);
    const double sphere_x = cone.k * unit_ball_volume(cone.k) * std::pow(e.along_x, cone.k - 1);
    const double sphere_y = cone.h * unit_ball_volume(cone.h) * std::pow(e.along_y, cone.h - 1);
    CHECK(link_area(cone) == doctest::Approx(sphere_x * sphere_y).epsilon(1e-13));
}

TEST_CASE("certified pair bookkeeping") {
    CHECK(certified_cones().size() == 6);
    CHECK(certified_cones_both_orders().size() == 12);
    for (const auto& c : certified_cones_both_orders()) {
        CHECK(c.certified());
        CHECK(c.m() >= 8);
        CHECK(c.m() <= 13);
    }
    CHECK(!ConeParams(4, 4).certified());
    CHECK(!ConeParams(2, 12).certified());
    CHECK(ConeParams(3, 5).certified());
    CHECK_THROWS_AS(ConeParams(1, 5), std::invalid_argument);
}
