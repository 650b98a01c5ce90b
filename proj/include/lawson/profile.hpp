#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lawson {

// Compactly supported scalar profile on a radial coordinate, stored as a
// piecewise-linear function on a strictly increasing grid with zero values
// at both ends of the support.
struct RadialProfile {
    std::vector<double> grid;
    std::vector<double> values;

    RadialProfile(std::vector<double> g, std::vector<double> v)
        : grid(std::move(g)), values(std::move(v)) {
        if (grid.size() != values.size() || grid.size() < 2)
            throw std::invalid_argument("RadialProfile: grid/values size mismatch");
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (!(grid[i] > grid[i - 1]))
                throw std::invalid_argument("RadialProfile: grid not strictly increasing");
        if (values.front() != 0.0 || values.back() != 0.0)
            throw std::invalid_argument("RadialProfile: values must vanish at the support ends");
    }

    double support_lo() const { return grid.front(); }
    double support_hi() const { return grid.back(); }
    std::size_t cells() const { return grid.size() - 1; }

    double eval(double r) const {
        if (r <= grid.front() || r >= grid.back()) return 0.0;
        const auto it = std::upper_bound(grid.begin(), grid.end(), r);
        const std::size_t i = static_cast<std::size_t>(it - grid.begin()) - 1;
        const double t = (r - grid[i]) / (grid[i + 1] - grid[i]);
        return values[i] + t * (values[i + 1] - values[i]);
    }

    double slope(double r) const {
        if (r < grid.front() || r > grid.back()) return 0.0;
        const auto it = std::upper_bound(grid.begin(), grid.end(), r);
        std::size_t i = static_cast<std::size_t>(it - grid.begin());
        i = (i == 0) ? 0 : i - 1;
        if (i + 1 >= grid.size()) i = grid.size() - 2;
        return (values[i + 1] - values[i]) / (grid[i + 1] - grid[i]);
    }

    // phi(r) = sin(pi (r-a)/(b-a)) sampled on n cells.
    static RadialProfile sine_bump(double a, double b, int n) {
        return sampled(a, b, n, [a, b](double r) {
            return std::sin(M_PI * (r - a) / (b - a));
        });
    }

    // C^2 polynomial bump 16 t^2 (1-t)^2.
    static RadialProfile smooth_bump(double a, double b, int n) {
        return sampled(a, b, n, [a, b](double r) {
            const double t = (r - a) / (b - a);
            return 16.0 * t * t * (1.0 - t) * (1.0 - t);
        });
    }

    // Piecewise-linear hat peaking at the midpoint.
    static RadialProfile hat(double a, double b, int n) {
        return sampled(a, b, n, [a, b](double r) {
            const double t = (r - a) / (b - a);
            return 1.0 - std::abs(2.0 * t - 1.0);
        });
    }

    template <class F>
    static RadialProfile sampled(double a, double b, int n, F&& f) {
        if (!(a < b) || n < 2) throw std::invalid_argument("RadialProfile: bad support");
        std::vector<double> g(static_cast<std::size_t>(n) + 1), v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            g[i] = a + (b - a) * static_cast<double>(i) / n;
            v[i] = f(g[i]);
        }
        v.front() = 0.0;
        v.back() = 0.0;
        return RadialProfile(std::move(g), std::move(v));
    }
};

}  // namespace lawson
