#include "lawson/constants_chain.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lawson/certification.hpp"
#include "lawson/quadrature.hpp"

namespace lawson {

double slab_volume(const ConeParams& cone, double R, double eps) {
    if (R <= 0.0 || eps < 0.0) throw std::invalid_argument("slab_volume: bad R or eps");
    if (eps == 0.0) return 0.0;
    const int k = cone.k, h = cone.h;
    const double sk = std::sqrt(static_cast<double>(k - 1));
    const double sh = std::sqrt(static_cast<double>(h - 1));
    const double wk = unit_ball_volume(k);
    const double wh = unit_ball_volume(h);

    // Inner x-range for given r_y: [sk (r_y/sh - eps), sk (r_y/sh + eps)],
    // clipped to [0, R]. Between breakpoints the integrand is a polynomial.
    std::vector<double> brk{0.0, R};
    const auto push = [&](double y) {
        if (y > 0.0 && y < R) brk.push_back(y);
    };
    push(eps * sh);                      // lower limit hits 0
    push(sh * (R / sk - eps));           // upper limit hits R
    push(sh * (R / sk + eps));           // lower limit hits R
    std::sort(brk.begin(), brk.end());

    const auto& gl = GaussLegendre::order(8);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
        acc += gl.integrate(brk[i], brk[i + 1], [&](double ry) {
            const double lo = std::clamp(sk * (ry / sh - eps), 0.0, R);
            const double hi = std::clamp(sk * (ry / sh + eps), 0.0, R);
            const double inner = wk * (ipow(hi, static_cast<unsigned>(k)) -
                                       ipow(lo, static_cast<unsigned>(k)));
            return h * wh * ipow(ry, static_cast<unsigned>(h - 1)) * inner;
        });
    }
    return acc;
}

SlabBoundParts slab_bound_paper(const ConeParams& cone, double R, double eps) {
    const int k = cone.k, h = cone.h, m = cone.m();
    const double wk = unit_ball_volume(k);
    const double wh = unit_ball_volume(h);
    const double two_k = ipow(2.0, static_cast<unsigned>(k));
    const double km1_pow = std::pow(static_cast<double>(k - 1), 0.5 * k);
    const double hm1_pow = std::pow(static_cast<double>(h - 1), 0.5 * h);
    SlabBoundParts parts;
    parts.inner = wk * km1_pow * two_k * std::pow(eps, m) * wh * hm1_pow;
    parts.outer = wk * km1_pow * two_k * h * wh * eps *
                  std::pow(R, m - 1) /
                  (std::pow(static_cast<double>(h - 1), 0.5 * (k - 1)) * (m - 1));
    parts.total = two_k * wk * wh * km1_pow * hm1_pow * eps *
                  (std::pow(eps, m - 1) +
                   h * std::pow(R, m - 1) /
                       (std::pow(static_cast<double>(h - 1), 0.5 * (m - 1)) * (m - 1)));
    return parts;
}

bool elementary_power_inequality_holds(int k, int grid_points) {
    for (int i = 1; i < grid_points; ++i) {
        const double t = static_cast<double>(i) / grid_points;
        const double lhs = std::pow(1.0 + t, k) - std::pow(1.0 - t, k);
        if (lhs > std::pow(2.0, k) * t * (1.0 + 1e-14)) return false;
    }
    return true;
}

AlphaBoundResult alpha_bound_chain(const ConeParams& cone, double R, double delta) {
    (void)cone;
    if (delta < 0.0 || R <= 0.0) throw std::invalid_argument("alpha_bound_chain: bad input");
    AlphaBoundResult res;
    if (delta >= 36.0) {
        res.volume_regime = true;
        res.eps_opt = R;
        res.alpha_bound = 6.0 * std::sqrt(delta);
        res.amgm_lhs = R * delta / res.eps_opt + 36.0 * res.eps_opt / R;
        res.amgm_rhs = 12.0 * std::sqrt(delta);
        res.eps_gate = true;
        return res;
    }
    res.volume_regime = false;
    res.eps_opt = R * std::sqrt(delta / 36.0);
    res.eps_gate = delta == 0.0 || std::pow(res.eps_opt / R, 13) < 35.0;
    if (res.eps_opt > 0.0) {
        res.amgm_lhs = R * delta / res.eps_opt + 36.0 * res.eps_opt / R;
    }
    res.amgm_rhs = 12.0 * std::sqrt(delta);
    res.alpha_bound = 7.0e10 * res.amgm_rhs;  // 7 * 12 * 10^10 * sqrt(delta)
    return res;
}

Rational theorem1_constant() {
    return Rational(7 * 7) * Rational(12 * 12) * rat_pow(Rational(10), 20);
}

double theorem1_constant_value() { return to_double(theorem1_constant()); }

ConstantDerivation constant_derivation(const ConeParams& cone) {
    const int k = cone.k, h = cone.h, m = cone.m();
    ConstantDerivation d{cone,
                         Surd(),
                         Surd(Rational(2) * rat_pow(Rational(11), 5), Rational(11)),
                         Surd(),
                         Surd(Rational(1)),
                         false,
                         false};
    // l = sqrt((m-2)/((h-1)(k-1))), c = claimed constant.
    const Surd l = Surd::sqrt_of(Rational(m - 2, (h - 1) * (k - 1)));
    d.perimeter_coeff = l / claimed_constant(cone);
    // Slab coefficient with w_k w_h <= 36 and the eps <= R regime factor.
    const Surd dims = Surd::rational_half_power(Rational(k - 1), k) *
                      Surd::rational_half_power(Rational(h - 1), h);
    const Surd shell = Surd(Rational(h, m - 1)) /
                       Surd::rational_half_power(Rational(h - 1), m - 1);
    const Surd shell_or_one = shell > Surd(Rational(1)) ? shell : Surd(Rational(1));
    d.slab_coeff = Surd(rat_pow(Rational(2), k) * Rational(36)) * dims * shell_or_one;
    d.slab_coeff_paper = Surd(rat_pow(Rational(2), 11) * Rational(36)) *
                         Surd::rational_half_power(Rational(10), 11) *
                         Surd::rational_half_power(Rational(2), 3);
    const Surd uniform(Rational(7) * rat_pow(Rational(10), 10));
    d.perimeter_ok = d.perimeter_coeff <= d.perimeter_coeff_paper &&
                     d.perimeter_coeff_paper <= uniform;
    d.slab_ok = d.slab_coeff <= d.slab_coeff_paper && d.slab_coeff_paper <= uniform;
    return d;
}

}  // namespace lawson
