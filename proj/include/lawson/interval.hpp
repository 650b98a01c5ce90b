#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lawson/rational.hpp"

namespace lawson {

// Closed interval [lo, hi] with outward rounding.
//
// Every arithmetic result is widened by one ulp on each side after the
// round-to-nearest hardware operation, which encloses the exact result for
// the IEEE-correctly-rounded ops (+, -, *, /, sqrt).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    explicit Interval(double x) : lo(x), hi(x) {}
    Interval(double l, double h) : lo(l), hi(h) {
        if (!(lo <= hi)) throw std::invalid_argument("Interval: lo > hi");
    }

    static Interval exact(double x) { return Interval(x); }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool strictly_positive() const { return lo > 0.0; }
};

namespace detail {
inline double next_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double next_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
}  // namespace detail

inline Interval operator+(Interval a, Interval b) {
    return {detail::next_down(a.lo + b.lo), detail::next_up(a.hi + b.hi)};
}

inline Interval operator-(Interval a, Interval b) {
    return {detail::next_down(a.lo - b.hi), detail::next_up(a.hi - b.lo)};
}

inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator*(Interval a, Interval b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {detail::next_down(std::min(std::min(p1, p2), std::min(p3, p4))),
            detail::next_up(std::max(std::max(p1, p2), std::max(p3, p4)))};
}

inline Interval operator/(Interval a, Interval b) {
    if (b.contains_zero()) throw std::domain_error("Interval division by interval containing 0");
    const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    return {detail::next_down(std::min(std::min(q1, q2), std::min(q3, q4))),
            detail::next_up(std::max(std::max(q1, q2), std::max(q3, q4)))};
}

inline Interval operator+(Interval a, double b) { return a + Interval(b); }
inline Interval operator+(double a, Interval b) { return Interval(a) + b; }
inline Interval operator-(Interval a, double b) { return a - Interval(b); }
inline Interval operator-(double a, Interval b) { return Interval(a) - b; }
inline Interval operator*(Interval a, double b) { return a * Interval(b); }
inline Interval operator*(double a, Interval b) { return Interval(a) * b; }
inline Interval operator/(Interval a, double b) { return a / Interval(b); }
inline Interval operator/(double a, Interval b) { return Interval(a) / b; }

inline Interval sqrt(Interval a) {
    if (a.lo < 0.0) throw std::domain_error("Interval sqrt of negative interval");
    const double lo = std::max(0.0, detail::next_down(std::sqrt(a.lo)));
    return {lo, detail::next_up(std::sqrt(a.hi))};
}

// a^n for integer n >= 0, by enclosure of the monotone/even cases.
inline Interval ipow(Interval a, unsigned n) {
    if (n == 0) return Interval(1.0);
    Interval acc = a;
    for (unsigned i = 1; i < n; ++i) acc = acc * a;
    if ((n % 2U) == 0U && a.contains_zero()) acc.lo = std::min(acc.lo, 0.0);
    return acc;
}

inline Interval hull(Interval a, Interval b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// Outward-rounded enclosure of an exact rational.
inline Interval to_interval(const Rational& q) {
    const double d = to_double(q);
    if (!std::isfinite(d)) throw std::domain_error("to_interval: rational out of double range");
    const Rational dq(d);
    if (dq == q) return Interval(d);
    if (dq < q) return {d, detail::next_up(d)};
    return {detail::next_down(d), d};
}

// Enclosure of q * sqrt(s) with q, s exact rationals, s >= 0.
inline Interval surd_enclosure(const Rational& q, const Rational& s) {
    if (s < 0) throw std::domain_error("surd_enclosure: negative radicand");
    return to_interval(q) * sqrt(to_interval(s));
}

}  // namespace lawson
