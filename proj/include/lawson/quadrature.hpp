#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace lawson {

// Integer power by binary exponentiation. Used instead of std::pow in the
// quadrature and assembly paths so that scaling x by a power of two scales
// the result exactly (each multiply is individually correctly rounded).
inline double ipow(double x, unsigned n) {
    double acc = 1.0;
    double base = x;
    while (n > 0) {
        if (n & 1U) acc *= base;
        base *= base;
        n >>= 1U;
    }
    return acc;
}

// Gauss-Legendre nodes/weights on [-1, 1].
//
// Computed once per order by Newton iteration on the Legendre polynomial;
// accurate to machine precision for the small orders used here.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(std::size_t n) : nodes(n), weights(n) {
        for (std::size_t i = 0; i < n; ++i) {
            // Chebyshev initial guess.
            double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                                (static_cast<double>(n) + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (std::size_t k = 2; k <= n; ++k) {
                    const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 -
                                       (static_cast<double>(k) - 1.0) * p0) /
                                      static_cast<double>(k);
                    p0 = p1;
                    p1 = pk;
                }
                dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }

    static const GaussLegendre& order(std::size_t n);

    // Integral of f over [a, b].
    template <class F>
    double integrate(double a, double b, F&& f) const {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            acc += weights[i] * f(mid + half * nodes[i]);
        }
        return acc * half;
    }

    // Composite rule over [a, b] with nseg equal segments.
    template <class F>
    double integrate_composite(double a, double b, std::size_t nseg, F&& f) const {
        double acc = 0.0;
        for (std::size_t s = 0; s < nseg; ++s) {
            const double sa = a + (b - a) * static_cast<double>(s) / static_cast<double>(nseg);
            const double sb = a + (b - a) * static_cast<double>(s + 1) / static_cast<double>(nseg);
            acc += integrate(sa, sb, f);
        }
        return acc;
    }
};

inline const GaussLegendre& GaussLegendre::order(std::size_t n) {
    static const GaussLegendre g2(2), g3(3), g4(4), g6(6), g7(7), g8(8), g12(12), g16(16);
    switch (n) {
        case 2: return g2;
        case 3: return g3;
        case 4: return g4;
        case 6: return g6;
        case 7: return g7;
        case 8: return g8;
        case 12: return g12;
        default: return g16;
    }
}

}  // namespace lawson
