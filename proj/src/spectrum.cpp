#include "lawson/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lawson/certification.hpp"
#include "lawson/quadrature.hpp"
#include "lawson/variation.hpp"

namespace lawson {

namespace {

// int_a^b r^q dr, exact power differences.
double power_integral(double a, double b, unsigned q) {
    return (ipow(b, q + 1) - ipow(a, q + 1)) / (q + 1);
}

// int_a^b r^q (a0 + a1 r)(b0 + b1 r) dr.
double affine_product_integral(double a, double b, unsigned q, double a0, double a1, double b0,
                               double b1) {
    return a0 * b0 * power_integral(a, b, q) + (a0 * b1 + a1 * b0) * power_integral(a, b, q + 1) +
           a1 * b1 * power_integral(a, b, q + 2);
}

}  // namespace

QuadraticFormResult quadratic_form(const RadialProfile& phi, const ConeParams& cone,
                                   double link_area_factor, int order) {
    if (phi.support_lo() <= 0.0)
        throw std::invalid_argument("quadratic_form: profile support touches r = 0");
    const int m = cone.m();
    const auto& gl = GaussLegendre::order(static_cast<std::size_t>(order));
    double Q = 0.0, N = 0.0;
    for (std::size_t i = 0; i + 1 < phi.grid.size(); ++i) {
        const double a = phi.grid[i], b = phi.grid[i + 1];
        const double slope = (phi.values[i + 1] - phi.values[i]) / (b - a);
        Q += gl.integrate(a, b, [&](double r) {
            const double val = phi.values[i] + slope * (r - a);
            return (slope * slope - (m - 2) / (r * r) * val * val) *
                   ipow(r, static_cast<unsigned>(m - 2));
        });
        N += gl.integrate(a, b, [&](double r) {
            const double val = phi.values[i] + slope * (r - a);
            return val * val * ipow(r, static_cast<unsigned>(m - 2));
        });
    }
    return {Q * link_area_factor, N * link_area_factor};
}

QuadraticFormResult quadratic_form(const RadialProfile& phi, const ConeParams& cone) {
    return quadratic_form(phi, cone, link_area(cone));
}

RadialPencil assemble_radial_pencil(const std::vector<double>& grid, int m,
                                    double potential_coeff) {
    const std::size_t n = grid.size();
    if (n < 3) throw std::invalid_argument("assemble_radial_pencil: need at least 3 nodes");
    if (m < 5) throw std::invalid_argument("assemble_radial_pencil: need m >= 5");
    const std::size_t ni = n - 2;  // interior nodes
    RadialPencil p;
    p.A.diag.assign(ni, 0.0);
    p.A.off.assign(ni - 1, 0.0);
    p.B.diag.assign(ni, 0.0);
    p.B.off.assign(ni - 1, 0.0);
    const unsigned qm = static_cast<unsigned>(m - 2);
    const unsigned qp = static_cast<unsigned>(m - 4);
    for (std::size_t e = 0; e + 1 < n; ++e) {
        const double a = grid[e], b = grid[e + 1];
        const double L = b - a;
        // Hat functions on the element: left = (b - r)/L, right = (r - a)/L.
        const double l0 = b / L, l1 = -1.0 / L;
        const double r0 = -a / L, r1 = 1.0 / L;
        const double kdd = power_integral(a, b, qm) / (L * L);
        const double mass_ll = affine_product_integral(a, b, qm, l0, l1, l0, l1);
        const double mass_rr = affine_product_integral(a, b, qm, r0, r1, r0, r1);
        const double mass_lr = affine_product_integral(a, b, qm, l0, l1, r0, r1);
        const double pot_ll = affine_product_integral(a, b, qp, l0, l1, l0, l1);
        const double pot_rr = affine_product_integral(a, b, qp, r0, r1, r0, r1);
        const double pot_lr = affine_product_integral(a, b, qp, l0, l1, r0, r1);
        const double a_ll = kdd - potential_coeff * pot_ll;
        const double a_rr = kdd - potential_coeff * pot_rr;
        const double a_lr = -kdd - potential_coeff * pot_lr;
        // Global indices of the element's endpoints among interior unknowns.
        const long gl_idx = static_cast<long>(e) - 1;
        const long gr_idx = static_cast<long>(e);
        if (gl_idx >= 0 && gl_idx < static_cast<long>(ni)) {
            p.A.diag[static_cast<std::size_t>(gl_idx)] += a_ll;
            p.B.diag[static_cast<std::size_t>(gl_idx)] += mass_ll;
        }
        if (gr_idx >= 0 && gr_idx < static_cast<long>(ni)) {
            p.A.diag[static_cast<std::size_t>(gr_idx)] += a_rr;
            p.B.diag[static_cast<std::size_t>(gr_idx)] += mass_rr;
        }
        if (gl_idx >= 0 && gr_idx < static_cast<long>(ni)) {
            p.A.off[static_cast<std::size_t>(gl_idx)] += a_lr;
            p.B.off[static_cast<std::size_t>(gl_idx)] += mass_lr;
        }
    }
    return p;
}

int sturm_count(const Tridiag& A, const Tridiag& B, double sigma) {
    const std::size_t n = A.diag.size();
    int count = 0;
    double d = A.diag[0] - sigma * B.diag[0];
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        const double e = A.off[i - 1] - sigma * B.off[i - 1];
        d = (A.diag[i] - sigma * B.diag[i]) - e * e / d;
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++count;
    }
    return count;
}

namespace {

double kth_smallest_eigenvalue(const Tridiag& A, const Tridiag& B, int kth, double lo, double hi) {
    int guard = 0;
    while (sturm_count(A, B, hi) < kth && guard++ < 200) hi += std::max(1.0, std::abs(hi));
    while (sturm_count(A, B, lo) >= kth && guard++ < 200) lo -= std::max(1.0, std::abs(lo));
    for (int it = 0; it < 200 && lo < hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (sturm_count(A, B, mid) >= kth) hi = mid;
        else lo = mid;
    }
    return hi;
}

}  // namespace

double smallest_eigenvalue(const Tridiag& A, const Tridiag& B, double lo, double hi,
                           double /*rel_tol*/) {
    return kth_smallest_eigenvalue(A, B, 1, lo, hi);
}

std::vector<double> log_grid(double R, int n) {
    if (n < 2) throw std::invalid_argument("log_grid: need n >= 2");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double expo = -6.0 * (static_cast<double>(n - 1 - i) / (n - 1));
        g[static_cast<std::size_t>(i)] = R * std::pow(10.0, expo);
    }
    return g;
}

namespace {

double smallest_lambda_on_grid(const ConeParams& cone, double R, int n, double potential_coeff) {
    const std::vector<double> grid = log_grid(R, n);
    const RadialPencil p = assemble_radial_pencil(grid, cone.m(), potential_coeff);
    const double r_min = grid.front();
    const double lo = -std::abs(potential_coeff) / (r_min * r_min) - 1.0 / (R * R);
    // Rayleigh quotient of a middle basis vector bounds lambda_1 from above.
    const std::size_t j = p.A.diag.size() / 2;
    const double hi = p.A.diag[j] / p.B.diag[j];
    return smallest_eigenvalue(p.A, p.B, lo, hi);
}

}  // namespace

SpectrumReport lambda_estimate(const ConeParams& cone, double R, int n) {
    if (n < 64) throw std::invalid_argument("lambda_estimate: need n >= 64");
    const int m = cone.m();
    SpectrumReport rep{cone};
    rep.R = R;
    rep.grid_size = n;
    rep.lambda = smallest_lambda_on_grid(cone, R, n, m - 2);
    rep.lambda_times_R2 = rep.lambda * R * R;
    const double l_half = smallest_lambda_on_grid(cone, R, n / 2, m - 2);
    const double l_quarter = smallest_lambda_on_grid(cone, R, n / 4, m - 2);
    const double h_n = 1.0 / (n - 1), h_2 = 1.0 / (n / 2 - 1), h_4 = 1.0 / (n / 4 - 1);
    const double d1 = l_quarter - l_half, d2 = l_half - rep.lambda;
    rep.convergence_order =
        (d1 != 0.0 && d2 != 0.0) ? std::log(std::abs(d1 / d2)) / std::log(h_4 / h_2) : 0.0;
    const double rho = (h_2 / h_n) * (h_2 / h_n);
    rep.lambda_extrapolated = rep.lambda + (rep.lambda - l_half) / (rho - 1.0);
    rep.hardy_floor = 0.25 * (m - 3) * (m - 3) - (m - 2);
    rep.claimed_c = cone.certified() ? claimed_constant(cone).approx() : 0.0;
    rep.margin_factor = rep.claimed_c > 0.0 ? rep.lambda_times_R2 / rep.claimed_c : 0.0;
    return rep;
}

double lambda_estimate_shifted(const ConeParams& cone, double R, int n, double mu) {
    return smallest_lambda_on_grid(cone, R, n, (cone.m() - 2) - mu);
}

double link_first_eigenvalue(const ConeParams& cone, int n) {
    const int m = cone.m();
    double best = std::numeric_limits<double>::infinity();
    for (int dim : {cone.k, cone.h}) {
        // Unit sphere S^(dim-1): weight sin^(dim-2) on (0, pi), free ends.
        const std::size_t nn = static_cast<std::size_t>(n);
        std::vector<double> theta(nn);
        for (std::size_t i = 0; i < nn; ++i)
            theta[i] = M_PI * static_cast<double>(i) / (nn - 1);
        Tridiag A{std::vector<double>(nn, 0.0), std::vector<double>(nn - 1, 0.0)};
        Tridiag B{std::vector<double>(nn, 0.0), std::vector<double>(nn - 1, 0.0)};
        const auto& gl = GaussLegendre::order(8);
        for (std::size_t e = 0; e + 1 < nn; ++e) {
            const double a = theta[e], b = theta[e + 1], L = b - a;
            const auto w = [&](double th) {
                return std::pow(std::sin(th), dim - 2);
            };
            const double kdd = gl.integrate(a, b, w) / (L * L);
            const double m_ll = gl.integrate(a, b, [&](double th) {
                const double phi = (b - th) / L;
                return w(th) * phi * phi;
            });
            const double m_rr = gl.integrate(a, b, [&](double th) {
                const double phi = (th - a) / L;
                return w(th) * phi * phi;
            });
            const double m_lr = gl.integrate(a, b, [&](double th) {
                return w(th) * (b - th) * (th - a) / (L * L);
            });
            A.diag[e] += kdd;
            A.diag[e + 1] += kdd;
            A.off[e] -= kdd;
            B.diag[e] += m_ll;
            B.diag[e + 1] += m_rr;
            B.off[e] += m_lr;
        }
        const double mu_unit = kth_smallest_eigenvalue(A, B, 2, -1.0, 4.0 * dim);
        // Link factor radius: a^2 = (dim-1)/(m-2).
        const double radius_sq = static_cast<double>(dim - 1) / (m - 2);
        best = std::min(best, mu_unit / radius_sq);
    }
    return best;
}

TaylorCheckReport taylor_second_variation_check(const ConeParams& cone, const RadialProfile& phi,
                                                const std::vector<double>& t_values, double R) {
    TaylorCheckReport rep;
    rep.t_values = t_values;
    const QuadraticFormResult qf = quadratic_form(phi, cone);
    rep.Q = qf.Q;
    rep.N = qf.N;
    for (double t : t_values) {
        if (t == 0.0) throw std::invalid_argument("taylor_second_variation_check: t = 0");
        rep.delta_p.push_back(perimeter_increment(phi, t, cone, R));
        rep.q_from_graph.push_back(2.0 * rep.delta_p.back() / (t * t));
        rep.dist_volume.push_back(strip_integral(phi, t, cone, [&](Vec2 p, double) {
            return dist_to_cone(make_reduced(p.x, p.y, cone), cone);
        }));
        rep.n_from_graph.push_back(2.0 * rep.dist_volume.back() / (t * t));
    }
    // Linear extrapolation of q(t) to t = 0 from the two smallest t.
    std::vector<std::size_t> idx(t_values.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return t_values[a] < t_values[b]; });
    const auto extrapolate = [&](const std::vector<double>& q) {
        if (idx.size() < 2) return q[idx[0]];
        const double t1 = t_values[idx[0]], t2 = t_values[idx[1]];
        return q[idx[0]] - t1 * (q[idx[1]] - q[idx[0]]) / (t2 - t1);
    };
    rep.q_limit_rel_error = std::abs(extrapolate(rep.q_from_graph) / rep.Q - 1.0);
    rep.n_limit_rel_error = std::abs(extrapolate(rep.n_from_graph) / rep.N - 1.0);
    // Log-log slope of the remainders.
    const auto slope_fit = [&](const std::vector<double>& val, double coeff) {
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < t_values.size(); ++i) {
            const double r = std::abs(val[i] - 0.5 * t_values[i] * t_values[i] * coeff);
            if (r > 0.0) {
                xs.push_back(std::log(t_values[i]));
                ys.push_back(std::log(r));
            }
        }
        if (xs.size() < 2) return 0.0;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double nn = static_cast<double>(xs.size());
        return (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    };
    rep.remainder_slope = slope_fit(rep.delta_p, rep.Q);
    rep.volume_remainder_slope = slope_fit(rep.dist_volume, rep.N);
    return rep;
}

}  // namespace lawson
