#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "lawson/interval.hpp"
#include "lawson/rational.hpp"

namespace lawson {

// Exact quadratic surd q * sqrt(s), q rational, s rational >= 0.
//
// Closed under multiplication, division and rational powers with denominator 2,
// which covers every constant appearing in the certified inequality chains.
// Comparisons are exact (reduce to rational comparisons of squares).
class Surd {
  public:
    Surd() : q_(0), s_(1) {}
    explicit Surd(Rational q) : q_(std::move(q)), s_(1) {}
    Surd(Rational q, Rational s) : q_(std::move(q)), s_(std::move(s)) {
        if (s_ < 0) throw std::domain_error("Surd: negative radicand");
        if (s_ == 0) { q_ = 0; s_ = 1; }
        if (q_ == 0) s_ = 1;
        normalize();
    }

    static Surd sqrt_of(const Rational& s) { return Surd(Rational(1), s); }

    const Rational& coeff() const { return q_; }
    const Rational& radicand() const { return s_; }
    bool is_rational() const { return s_ == 1 || q_ == 0; }

    int sign() const { return q_ > 0 ? 1 : (q_ < 0 ? -1 : 0); }

    Surd operator*(const Surd& o) const { return Surd(q_ * o.q_, s_ * o.s_); }
    Surd operator/(const Surd& o) const {
        if (o.q_ == 0) throw std::domain_error("Surd: division by zero");
        // 1/sqrt(s) = sqrt(s)/s
        return Surd(q_ / (o.q_ * o.s_), s_ * o.s_);
    }
    Surd operator*(const Rational& r) const { return Surd(q_ * r, s_); }
    Surd operator/(const Rational& r) const { return Surd(q_ / r, s_); }

    // this^(3/2) etc. are expressible when the base is rational: r^(p/2) = r^floor(p/2) * sqrt(r^(p mod 2)).
    static Surd rational_half_power(const Rational& base, long num_halves) {
        if (base < 0) throw std::domain_error("Surd: half power of negative base");
        if (num_halves < 0) {
            if (base == 0) throw std::domain_error("Surd: negative power of zero");
            Surd pos = rational_half_power(base, -num_halves);
            return Surd(Rational(1)) / pos;
        }
        const long whole = num_halves / 2;
        const bool half = (num_halves % 2) != 0;
        Rational coeff = rat_pow(base, whole);
        return half ? Surd(coeff, base) : Surd(coeff);
    }

    // Exact square: q^2 * s (rational).
    Rational squared() const { return q_ * q_ * s_; }

    // Exact three-way comparison.
    int compare(const Surd& o) const {
        const int sa = sign(), sb = o.sign();
        if (sa != sb) return sa < sb ? -1 : 1;
        if (sa == 0) return 0;
        const Rational a2 = squared(), b2 = o.squared();
        int c = a2 == b2 ? 0 : (a2 < b2 ? -1 : 1);
        return sa > 0 ? c : -c;
    }
    bool operator<(const Surd& o) const { return compare(o) < 0; }
    bool operator<=(const Surd& o) const { return compare(o) <= 0; }
    bool operator>(const Surd& o) const { return compare(o) > 0; }
    bool operator>=(const Surd& o) const { return compare(o) >= 0; }
    bool operator==(const Surd& o) const { return compare(o) == 0; }

    double approx() const { return to_double(q_) * std::sqrt(to_double(s_)); }

    Interval enclosure() const { return surd_enclosure(q_, s_); }

    std::string str() const {
        if (is_rational()) return rat_str(q_);
        return "(" + rat_str(q_) + ")*sqrt(" + rat_str(s_) + ")";
    }

  private:
    // Pull square factors out of the radicand: q sqrt(a^2 b) -> (q a) sqrt(b).
    // Trial division is fine at the magnitudes appearing in the chains.
    void normalize() {
        if (s_ == 1 || q_ == 0) return;
        // Clear the denominator: sqrt(p/q) = sqrt(p q)/q.
        if (denominator(s_) != 1) {
            q_ /= Rational(denominator(s_));
            s_ = Rational(numerator(s_) * denominator(s_));
        }
        BigInt n = numerator(s_);
        BigInt square(1);
        for (BigInt f(2); f * f <= n;) {
            if (n % (f * f) == 0) {
                n /= f * f;
                square *= f;
            } else {
                ++f;
            }
        }
        if (square != 1) {
            q_ *= Rational(square);
            s_ = Rational(n);
        }
    }

    Rational q_;
    Rational s_;
};

}  // namespace lawson
