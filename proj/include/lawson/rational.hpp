#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace lawson {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

// x^e for integer e (e may be negative; x must be nonzero then).
inline Rational rat_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? x : Rational(1) / x;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (n > 0) {
        if (n & 1UL) acc *= base;
        base *= base;
        n >>= 1UL;
    }
    return acc;
}

inline std::string rat_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace lawson
