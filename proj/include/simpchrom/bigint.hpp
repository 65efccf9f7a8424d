#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace simpchrom {

// Exact arithmetic everywhere: inclusion-exclusion sums over 2^r subsets and
// Ehrhart interpolation both overflow 64-bit integers on legitimate inputs.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer out = 1;
    for (long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;  // always exact: product of i consecutive integers
    }
    return out;
}

inline Integer int_pow(const Integer& base, unsigned long exp) {
    Integer out = 1, b = base;
    while (exp) {
        if (exp & 1) out *= b;
        b *= b;
        exp >>= 1;
    }
    return out;
}

inline bool is_integral(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline Integer to_integer(const Rational& q) {
    return boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
}

inline bool fits_int64(const Integer& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace simpchrom
