#include "lawson/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace lawson {

CalibrationBranch certified_branch(const ConeParams& cone, BranchKind kind) {
    if (!cone.certified())
        throw UncertifiedConeError("certified_branch: (" + cone.name() + ") not certified");
    const int k = cone.k, h = cone.h;
    Rational d;
    if (std::min(k, h) == 3) {
        d = Rational(3, 4);
    } else if (h == 2) {
        d = (kind == BranchKind::UPower) ? Rational(3, 2) : Rational(1);
    } else {  // k == 2
        d = (kind == BranchKind::UPower) ? Rational(1) : Rational(3, 2);
    }
    return {kind, d, cone};
}

CalibrationBranch branch_for_region(const ConeParams& cone, Region region) {
    return certified_branch(
        cone, region == Region::InK ? BranchKind::VPower : BranchKind::UPower);
}

BranchCoeffs branch_coeffs(const CalibrationBranch& b) {
    const Rational d = b.d;
    const Rational one(1);
    const int h = b.cone.h, k = b.cone.k;
    BranchCoeffs c;
    c.d = d;
    c.kind = b.kind;
    c.cN = Rational((h - 1) * (k - 1), 8);
    if (b.kind == BranchKind::UPower) {
        // |grad f|^3 div g = cN u^(3d-2) (u-v) ((1+d)^2 (d(h-1)-1) u^2
        //   + d(k - 2 + d(1 + 2d - 2(1+d)h)) u v + d^3 (h-1) v^2)
        c.pWW = (one + d) * (one + d) * (d * (h - 1) - 1);
        c.pWO = d * (Rational(k - 2) + d * (one + 2 * d - 2 * (one + d) * h));
        c.pOO = d * d * d * (h - 1);
        // |grad f|^2 = u^(2d-1) ((h-1)/4 ((d+1)u - dv)^2 + (k-1)/4 uv)
        c.eWW = Rational(h - 1, 4) * (d + 1) * (d + 1);
        c.eWO = Rational(k - 1, 4) - Rational(h - 1, 2) * d * (d + 1);
        c.eOO = Rational(h - 1, 4) * d * d;
    } else {
        // |grad f|^3 div g = cN (u-v) v^(3d-2) (d^3 (k-1) u^2
        //   + d(h - 2 + d(1 + 2d - 2(1+d)k)) u v + (d+1)^2 (d(k-1)-1) v^2)
        // (coefficients indexed with w = v, o = u)
        c.pWW = (one + d) * (one + d) * (d * (k - 1) - 1);
        c.pWO = d * (Rational(h - 2) + d * (one + 2 * d - 2 * (one + d) * k));
        c.pOO = d * d * d * (k - 1);
        // |grad f|^2 = v^(2d-1) ((k-1)/4 ((d+1)v - du)^2 + (h-1)/4 uv)
        c.eWW = Rational(k - 1, 4) * (d + 1) * (d + 1);
        c.eWO = Rational(h - 1, 4) - Rational(k - 1, 2) * d * (d + 1);
        c.eOO = Rational(k - 1, 4) * d * d;
    }
    return c;
}

double pow_q(double x, const Rational& e) {
    return std::pow(x, to_double(e));
}

Interval pow_q(Interval x, const Rational& e) {
    const BigInt num_b = numerator(e), den_b = denominator(e);
    const long num = num_b.convert_to<long>();
    const long den = den_b.convert_to<long>();
    const bool neg = num < 0;
    const unsigned long p = static_cast<unsigned long>(neg ? -num : num);
    Interval base;
    if (den == 1) {
        base = ipow(x, static_cast<unsigned>(p));
    } else if (den == 2) {
        base = sqrt(ipow(x, static_cast<unsigned>(p)));
    } else if (den == 4) {
        base = sqrt(sqrt(ipow(x, static_cast<unsigned>(p))));
    } else {
        throw std::domain_error("pow_q(Interval): unsupported exponent denominator");
    }
    return neg ? Interval(1.0) / base : base;
}

namespace {

struct BranchVars {
    double w = 0.0;  // the branch's power variable
    double o = 0.0;  // the other variable
};

BranchVars branch_vars(const ReducedPoint& p, const CalibrationBranch& b) {
    if (p.is_apex()) throw ApexError("calibration: evaluation at the apex");
    return b.kind == BranchKind::UPower ? BranchVars{p.u, p.v} : BranchVars{p.v, p.u};
}

}  // namespace

double f_value(const ReducedPoint& p, const CalibrationBranch& b) {
    const auto [w, o] = branch_vars(p, b);
    return 0.25 * (p.u - p.v) * pow_q(w, b.d);
}

RadialGradient grad_f(const ReducedPoint& p, const CalibrationBranch& b) {
    const auto [w, o] = branch_vars(p, b);
    const double d = to_double(b.d);
    if (w == 0.0 && d < 1.0)
        throw DegenerateAxisError("grad_f: power variable vanishes with d < 1");
    const int h = b.cone.h, k = b.cone.k;
    const double wd = pow_q(w, b.d);
    const double wdm1 = w == 0.0 ? 0.0 : pow_q(w, b.d - 1);
    RadialGradient g;
    if (b.kind == BranchKind::UPower) {
        g.gx = 0.5 * (h - 1) * p.r_x * ((d + 1.0) * wd - d * o * wdm1);
        g.gy = -0.5 * (k - 1) * p.r_y * wd;
    } else {
        g.gx = 0.5 * (h - 1) * p.r_x * wd;
        g.gy = 0.5 * (k - 1) * p.r_y * (d * o * wdm1 - (d + 1.0) * wd);
    }
    return g;
}

double grad_norm_sq(const ReducedPoint& p, const CalibrationBranch& b) {
    const auto [w, o] = branch_vars(p, b);
    if (w == 0.0 && to_double(b.d) < 1.0)
        throw DegenerateAxisError("grad_norm_sq: power variable vanishes with d < 1");
    const auto c = branch_coeffs(b);
    const double e = to_double(c.eWW) * w * w + to_double(c.eWO) * w * o +
                     to_double(c.eOO) * o * o;
    return pow_q(w, 2 * b.d - 1) * e;
}

double div_g_closed(const ReducedPoint& p, const CalibrationBranch& b) {
    const auto [w, o] = branch_vars(p, b);
    if (w == 0.0) {
        // Quotient with exponents pre-combined diverges only if the power
        // variable itself vanishes; that happens on-branch only at the apex.
        throw ZeroGradientError("div_g_closed: power variable vanishes");
    }
    if (grad_norm_sq(p, b) <= 0.0)
        throw ZeroGradientError("div_g_closed: zero gradient");
    const auto c = branch_coeffs(b);
    return div_g_expr(p.u, p.v, b.kind, convert_coeffs<double>(c));
}

Interval div_g_closed(Interval u, Interval v, const BranchCoeffs& c) {
    return div_g_expr(u, v, c.kind, convert_coeffs<Interval>(c));
}

FieldSample g_field(const ReducedPoint& p, const ConeParams& cone) {
    if (p.is_apex()) throw ApexError("g_field: apex");
    const CalibrationBranch b = branch_for_region(cone, p.region);
    const RadialGradient grad = grad_f(p, b);
    const double nsq = grad_norm_sq(p, b);
    if (nsq <= 0.0) throw ZeroGradientError("g_field: zero gradient");
    const double n = std::sqrt(nsq);
    FieldSample s;
    s.g_x = grad.gx / n;
    s.g_y = grad.gy / n;
    s.div_g = div_g_closed(p, b);
    s.grad_norm_sq = nsq;
    return s;
}

namespace {

// Ambient g on a fixed branch, from the first-derivative formulas only.
std::vector<double> ambient_g(const std::vector<double>& z, const CalibrationBranch& b) {
    const int k = b.cone.k, h = b.cone.h;
    double sx = 0.0, sy = 0.0;
    for (int i = 0; i < k; ++i) sx += z[i] * z[i];
    for (int i = 0; i < h; ++i) sy += z[k + i] * z[k + i];
    const double u = (h - 1) * sx, v = (k - 1) * sy;
    const auto [w, o] =
        b.kind == BranchKind::UPower ? std::pair{u, v} : std::pair{v, u};
    const double d = to_double(b.d);
    const double wd = pow_q(w, b.d);
    const double wdm1 = w == 0.0 ? 0.0 : pow_q(w, b.d - 1);
    // Per-coordinate gradient factors: grad_x f = fx * x_i, grad_y f = fy * y_i.
    double fx, fy;
    if (b.kind == BranchKind::UPower) {
        fx = 0.5 * (h - 1) * ((d + 1.0) * wd - d * o * wdm1);
        fy = -0.5 * (k - 1) * wd;
    } else {
        fx = 0.5 * (h - 1) * wd;
        fy = 0.5 * (k - 1) * (d * o * wdm1 - (d + 1.0) * wd);
    }
    const double nsq = fx * fx * sx + fy * fy * sy;
    if (nsq <= 0.0) throw ZeroGradientError("ambient_g: zero gradient");
    const double n = std::sqrt(nsq);
    std::vector<double> g(static_cast<std::size_t>(k + h));
    for (int i = 0; i < k; ++i) g[i] = fx * z[i] / n;
    for (int i = 0; i < h; ++i) g[k + i] = fy * z[k + i] / n;
    return g;
}

}  // namespace

double div_g_fd(const AmbientPoint& p, const CalibrationBranch& b, double step) {
    const ReducedPoint rp = reduce(p, b.cone);
    if (rp.is_apex()) throw ApexError("div_g_fd: apex");
    const double d_cone = dist_to_cone(rp, b.cone);
    if (d_cone <= 10.0 * step || rp.norm() <= 10.0 * step)
        throw OracleUnreliableError("div_g_fd: step too large for this point");
    const int m = b.cone.m();
    std::vector<double> z(static_cast<std::size_t>(m));
    for (int i = 0; i < b.cone.k; ++i) z[i] = p.x[i];
    for (int i = 0; i < b.cone.h; ++i) z[b.cone.k + i] = p.y[i];
    double div = 0.0;
    for (int i = 0; i < m; ++i) {
        std::vector<double> zp = z, zm = z;
        zp[i] += step;
        zm[i] -= step;
        div += (ambient_g(zp, b)[i] - ambient_g(zm, b)[i]) / (2.0 * step);
    }
    return div;
}

DerivativeGrowthReport derivative_growth_probe(const ConeParams& cone,
                                               const std::vector<double>& radii,
                                               int theta_samples) {
    DerivativeGrowthReport rep;
    rep.radii = radii;
    const int m = cone.m();
    for (double r : radii) {
        const double step = 1e-6 * r;
        double worst = 0.0, worst_theta = 0.0;
        for (int t = 1; t < theta_samples; ++t) {
            const double theta = 0.5 * M_PI * t / theta_samples;
            const double rx = r * std::cos(theta), ry = r * std::sin(theta);
            const ReducedPoint rp = make_reduced(rx, ry, cone);
            // Skip the kink across M: the branch formulas are one-sided there.
            if (dist_to_cone(rp, cone) < 4.0 * step) continue;
            const CalibrationBranch b = branch_for_region(cone, rp.region);
            std::vector<double> z(static_cast<std::size_t>(m), 0.0);
            z[0] = rx;
            z[cone.k] = ry;
            double frob_sq = 0.0;
            for (int j = 0; j < m; ++j) {
                std::vector<double> zp = z, zm = z;
                zp[j] += step;
                zm[j] -= step;
                const auto gp = ambient_g(zp, b), gm = ambient_g(zm, b);
                for (int i = 0; i < m; ++i) {
                    const double dij = (gp[i] - gm[i]) / (2.0 * step);
                    frob_sq += dij * dij;
                }
            }
            const double prod = std::sqrt(frob_sq) * r;
            if (prod > worst) {
                worst = prod;
                worst_theta = theta;
            }
        }
        rep.max_dg_times_r.push_back(worst);
        rep.worst_theta.push_back(worst_theta);
    }
    const auto [mn, mx] =
        std::minmax_element(rep.max_dg_times_r.begin(), rep.max_dg_times_r.end());
    rep.bounded = (*mn > 0.0) && (*mx / *mn <= 2.0);
    return rep;
}

}  // namespace lawson
