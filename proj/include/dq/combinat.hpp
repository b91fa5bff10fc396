#pragma once

// Exact integer/rational arithmetic and the counting functions shared by the
// bound formulas. All values are arbitrary precision; small structural
// parameters (n, q, d, ...) are plain 64-bit integers.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace dq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 50-digit binary float, used only for non-certified estimates that involve
/// logarithms or e.
using Real = boost::multiprecision::cpp_bin_float_50;

inline Integer ipow(const Integer& base, std::int64_t exponent) {
    if (exponent < 0) throw std::domain_error("ipow: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

inline Integer ipow(std::int64_t base, std::int64_t exponent) {
    return ipow(Integer(base), exponent);
}

/// Binomial coefficient with C(n,k) = 0 for k < 0 or k > n.
inline Integer binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::domain_error("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

/// Number of surjections from an m-set onto a j-set, by inclusion-exclusion.
/// Equals the sum of multinomials over positive compositions of m into j parts.
inline Integer surjection_count(std::int64_t m, std::int64_t j) {
    if (m < 0 || j < 0) throw std::domain_error("surjection_count: negative argument");
    if (j > m) return 0;
    Integer total = 0;
    for (std::int64_t i = 0; i <= j; ++i) {
        Integer term = binomial(j, i) * ipow(j - i, m);
        if (i % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

/// Falling factorial q (q-1) ... (q-len+1); zero once a factor hits zero.
inline Integer falling_factorial(std::int64_t q, std::int64_t len) {
    Integer r = 1;
    for (std::int64_t i = 0; i < len; ++i) r *= (q - i);
    return r;
}

inline Integer floor_of(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    Integer quo = num / den;  // truncates toward zero
    if (num < 0 && quo * den != num) quo -= 1;
    return quo;
}

inline Integer ceil_of(const Rational& r) {
    Integer f = floor_of(r);
    return f == r ? f : f + 1;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num, den);
}

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& r) {
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

inline Real to_real(const Rational& r) {
    return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
}

inline std::string to_string(const Real& r, int digits = 12) {
    return r.str(digits, std::ios_base::scientific);
}

}  // namespace dq
