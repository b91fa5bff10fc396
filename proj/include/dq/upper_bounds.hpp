#pragma once

// Closed-form upper bounds on D_q(n,d). Every function checks its validity
// domain first and returns a not-applicable BoundValue outside it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "dq/bound_value.hpp"
#include "dq/combinat.hpp"
#include "dq/lp_bound.hpp"

namespace dq {

namespace detail {
inline std::string range_note(const char* what) { return std::string("requires ") + what; }

inline Integer q_ary_ball_sum(std::int64_t n, std::int64_t q, std::int64_t upto) {
    Integer total = 0;
    for (std::int64_t i = 0; i <= upto; ++i) total += binomial(n, i) * ipow(q - 1, i);
    return total;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Levenshtein's sphere-packing bound with free parameter r.

inline BoundValue levenshtein_upper(const Params& p, std::int64_t r) {
    const std::int64_t n = p.n, q = p.q, h = p.half_d();
    const char* name = "levenshtein_eq3";
    if (p.d < 4 || p.d > 2 * n - 2) return BoundValue::not_applicable(name, BoundKind::CertifiedUpper, detail::range_note("4 <= d <= 2n-2"));
    if (r < h - 2 || r > n - 1 || r < 0)
        return BoundValue::not_applicable(name, BoundKind::CertifiedUpper, detail::range_note("d/2-2 <= r <= n-1"));
    Integer denom = 0;
    for (std::int64_t i = 0; i <= h - 1; ++i) denom += binomial(r + 2 - h, i);
    Rational v = Rational(ipow(q, n - h + 1), denom);
    Integer tail = 0;
    for (std::int64_t i = 0; i <= r - 1; ++i) tail += binomial(n - 1, i) * ipow(q - 1, i);
    v += Rational(q * tail);
    BoundValue b = BoundValue::upper(name, v);
    b.detail = "r=" + std::to_string(r);
    return b;
}

/// Levenshtein's bound minimized over every admissible r (smallest r on ties).
inline BoundValue levenshtein_upper_best(const Params& p) {
    const std::int64_t h = p.half_d();
    if (p.d < 4 || p.d > 2 * p.n - 2)
        return BoundValue::not_applicable("levenshtein_eq3", BoundKind::CertifiedUpper, detail::range_note("4 <= d <= 2n-2"));
    BoundValue best;
    for (std::int64_t r = std::max<std::int64_t>(0, h - 2); r <= p.n - 1; ++r) {
        BoundValue b = levenshtein_upper(p, r);
        if (!best.applicable || *b.value < *best.value) best = b;
    }
    return best;
}

/// Lower envelope of Levenshtein's bound over r: first term at r = n-1, second
/// term at r = d/2-2. Used only for comparisons.
inline Rational levenshtein_envelope(const Params& p) {
    const std::int64_t n = p.n, q = p.q, h = p.half_d();
    if (p.d < 4 || p.d > 2 * n - 2) throw std::domain_error("levenshtein_envelope: requires 4 <= d <= 2n-2");
    Integer denom = 0;
    for (std::int64_t i = 0; i <= h - 1; ++i) denom += binomial(n + 1 - h, i);
    Integer tail = 0;
    for (std::int64_t i = 0; i <= h - 3; ++i) tail += binomial(n - 1, i) * ipow(q - 1, i);
    return Rational(ipow(q, n - h + 1), denom) + Rational(q * tail);
}

// ---------------------------------------------------------------------------
// Bours' bound for d = 2n-2.

inline Integer bours_value(std::int64_t n, std::int64_t q) {
    if (n < 2 || q < 2) throw std::domain_error("bours: need n, q >= 2");
    const Integer inner = floor_of(Rational(2 * (q - 1), n - 1));
    return floor_of(Rational(Integer(q) * inner, Integer(n))) + q;
}

inline BoundValue bours_upper(std::int64_t n, std::int64_t q) {
    return BoundValue::upper("bours", Rational(bours_value(n, q)), "d = 2n-2");
}

inline BoundValue bours_upper(const Params& p) {
    if (p.d != 2 * p.n - 2) return BoundValue::not_applicable("bours", BoundKind::CertifiedUpper, detail::range_note("d = 2n-2"));
    return bours_upper(p.n, p.q);
}

// ---------------------------------------------------------------------------
// Kulkarni-Kiyavash bound, 4 <= d <= n+1.

/// The piecewise delta(r, m) of the hypergraph-packing bound.
inline Integer kk_delta(std::int64_t r, std::int64_t m) {
    if (m < 0 || m > r) return 0;
    if (r == m) return 1;
    Integer total = 0;
    for (std::int64_t i = 0; i <= m; ++i) total += binomial(r - m, i);
    return total;
}

inline BoundValue kk_upper(const Params& p) {
    const std::int64_t n = p.n, q = p.q, d = p.d, h = p.half_d();
    const char* name = "kk";
    if (d < 4 || d > n + 1) return BoundValue::not_applicable(name, BoundKind::CertifiedUpper, detail::range_note("4 <= d <= n+1"));
    Rational total = 0;
    for (std::int64_t r = 3; r <= n - h + 1; ++r) {
        Integer denom = kk_delta(r, h - 1);
        // An inverted summation range is an empty sum.
        for (std::int64_t i = d + r - n - 3; i <= std::min(h - 3, r - 3); ++i) denom += kk_delta(r - 2, i);
        const Integer num = Integer(q) * ipow(q - 1, r - 1) * binomial(n - h, r - 1);
        if (denom == 0) {
            if (num == 0) continue;
            return BoundValue::not_applicable(name, BoundKind::CertifiedUpper,
                                              "zero denominator at r=" + std::to_string(r));
        }
        total += Rational(num, denom);
    }
    for (std::int64_t r = 1; r <= 2; ++r) total += Rational(Integer(q) * binomial(n - h, r - 1) * ipow(q - 1, r - 1));
    return BoundValue::upper(name, total);
}

// ---------------------------------------------------------------------------
// The dual-certificate bounds: closed forms for d = 2n-2, 2n-4 and 4 <= d <= 2n-6.

inline Rational thm25_eq7_value(std::int64_t n, std::int64_t q) {
    return Rational(q) + Rational(Integer(2) * q * (q - 1), Integer(n) * (n - 1));
}

inline Rational thm25_eq8_value(std::int64_t n, std::int64_t q) {
    return Rational(3 * Integer(q) * q - q) + Rational(Integer(q) * (q - 1) * (q - 2), binomial(n, 3));
}

/// The correction sum U_{n,q,d}; inverted ranges are empty.
inline Rational thm25_u_term(std::int64_t n, std::int64_t q, std::int64_t d) {
    const std::int64_t s = n - d / 2;
    const std::int64_t c = (s + 2) / 2;  // ceil((s+1)/2)
    Rational u = 0;
    for (std::int64_t j = c + 1; j <= s - 1; ++j) {
        const Integer num = binomial(q, j) * ipow(j, s + 1);
        const Integer den = binomial(2 * j + d - n - 2, 2 * j + d / 2 - n - 1);
        u += Rational(num, den);
    }
    for (std::int64_t j = 1; j <= c; ++j) u += Rational(binomial(q, j) * ipow(j, s + 1));
    return u;
}

/// The general closed form, written as
///   [q(q-1)...(q-s) + q(q-1)...(q-s+1) (s+1)(n-1)/2] / C(n, d/2-1) + U
/// which equals the factored form whenever q != s and stays finite at q = s.
inline Rational thm25_eq6_value(std::int64_t n, std::int64_t q, std::int64_t d) {
    const std::int64_t s = n - d / 2;
    Rational main = Rational(falling_factorial(q, s + 1)) +
                    Rational(falling_factorial(q, s) * (s + 1) * (n - 1), Integer(2));
    main /= Rational(binomial(n, d / 2 - 1));
    return main + thm25_u_term(n, q, d);
}

inline BoundValue thm25_upper(const Params& p) {
    const std::int64_t n = p.n, q = p.q, d = p.d;
    if (d < 4 || d > 2 * n - 2)
        return BoundValue::not_applicable("thm25", BoundKind::CertifiedUpper, detail::range_note("4 <= d <= 2n-2"));
    if (d == 2 * n - 2) return BoundValue::upper("thm25_eq7", thm25_eq7_value(n, q), "d = 2n-2");
    if (d == 2 * n - 4) return BoundValue::upper("thm25_eq8", thm25_eq8_value(n, q), "d = 2n-4");
    return BoundValue::upper("thm25_eq6", thm25_eq6_value(n, q, d), "4 <= d <= 2n-6");
}

// ---------------------------------------------------------------------------
// Liu-Xing bounds.

inline BoundValue liu_xing_upper(const Params& p) {
    const std::int64_t n = p.n, q = p.q, d = p.d, h = p.half_d();
    const char* name = "liu_xing";
    if (d == 2) return BoundValue::exact(name, ipow(q, n), "d = 2: all words");
    if (d == 2 * n) return BoundValue::exact(name, Integer(q), "d = 2n: constant words");
    if (d < 4 || d > 2 * n - 2) return BoundValue::not_applicable(name, BoundKind::CertifiedUpper, detail::range_note("2 <= d <= 2n"));
    Rational item2 = Rational(ipow(q, n - h + 1) + ipow(q, n - h), Integer(2));
    BoundValue b = BoundValue::upper(name, item2, "4 <= d <= 2n-2");
    b.detail = "item 2";
    if (2 * q <= d) {
        Rational item3 = Rational(ipow(q, n - h));
        if (item3 < item2) {
            b = BoundValue::upper(name, item3, "2q <= d <= 2n-2");
            b.detail = "item 3";
        }
    }
    return b;
}

inline Integer improved_first_branch(std::int64_t q, std::int64_t d) {
    const Integer inner = floor_of(Rational(4 * (q - 1), d));
    return floor_of(Rational(Integer(2 * q) * inner, Integer(d + 2))) + q;
}

inline Rational improved_second_branch(std::int64_t q, std::int64_t d) {
    return Rational(Integer(48) * (q - 1) * (q - 2), Integer(d + 4) * (d + 2) * d) + Rational(3 * q - 1);
}

inline BoundValue improved_liu_xing_upper(const Params& p) {
    const std::int64_t n = p.n, q = p.q, d = p.d;
    const char* name = "improved_liu_xing";
    if (d < 4 || d > 2 * n - 4) return BoundValue::not_applicable(name, BoundKind::CertifiedUpper, detail::range_note("4 <= d <= 2n-4"));
    const Rational first = Rational(improved_first_branch(q, d));
    const Rational second = improved_second_branch(q, d);
    const Rational scale = Rational(ipow(q, n - d / 2 - 1));
    BoundValue b = BoundValue::upper(name, scale * std::min(first, second));
    b.detail = first <= second ? "first branch" : "second branch";
    return b;
}

/// Lifts a bound on D_q(d/2+i, d) to D_q(n, d) by the factor q^{n-d/2-i}.
inline BoundValue recursive_upper(const Params& p, std::int64_t i, const BoundValue& base) {
    const std::int64_t n = p.n, q = p.q, d = p.d;
    if (d < 4 || d > 2 * n - 2) return BoundValue::not_applicable("recursive", BoundKind::CertifiedUpper, detail::range_note("4 <= d <= 2n-2"));
    if (i < 1 || i > n - d / 2) return BoundValue::not_applicable("recursive", BoundKind::CertifiedUpper, detail::range_note("1 <= i <= n-d/2"));
    if (!base.bounds_above() || !base.value) throw std::invalid_argument("recursive_upper: base must be a certified upper bound");
    if (*base.value < Rational(ipow(q, i)))
        throw std::invalid_argument("recursive_upper: base value " + to_string(*base.value) + " is below q^i");
    BoundValue b = BoundValue::upper("recursive", Rational(ipow(q, n - d / 2 - i)) * *base.value);
    b.detail = "i=" + std::to_string(i) + " base=" + base.name;
    return b;
}

// ---------------------------------------------------------------------------
// Bound for q | n and 2q-2 <= d <= 2n-2n/q.

inline BoundValue lwgz_upper(const Params& p) {
    const std::int64_t n = p.n, q = p.q, d = p.d;
    const char* name = "lwgz";
    if (n % q != 0) return BoundValue::not_applicable(name, BoundKind::CertifiedUpper, detail::range_note("q divides n"));
    if (d < 2 * q - 2 || d > 2 * n - 2 * n / q)
        return BoundValue::not_applicable(name, BoundKind::CertifiedUpper, detail::range_note("2q-2 <= d <= 2n-2n/q"));
    const std::int64_t base_exp = n - d / 2;
    if (d % (2 * q - 2) == 0) {
        const std::int64_t e = base_exp - d / (2 * q - 2);
        BoundValue b = BoundValue::upper(name, Rational(ipow(q, e) * (q + 2)));
        b.detail = "exponent " + std::to_string(e);
        return b;
    }
    // Fractional exponent: evaluated in floating point and not certified.
    const Real e = Real(base_exp) - Real(d) / Real(2 * q - 2);
    BoundValue b = BoundValue::estimate(name, Real(boost::multiprecision::pow(Real(q), e) * Real(q + 2)),
                                        "non-integral exponent d/(2q-2)");
    b.detail = "exponent " + to_string(e, 8);
    return b;
}

// ---------------------------------------------------------------------------
// LP-derived bounds.

inline BoundValue lp_optimum_upper(const Params& p) {
    if (p.d < 4 || p.d > 2 * p.n - 2)
        return BoundValue::not_applicable("lp_optimum", BoundKind::CertifiedUpper, detail::range_note("4 <= d <= 2n-2"));
    const LinearProgram lp = build_lp(p.n, p.q, p.s());
    BoundValue b = BoundValue::upper("lp_optimum", solve_lp_exact(lp));
    b.detail = "s=" + std::to_string(p.s());
    return b;
}

inline BoundValue lp_dual_certificate_upper(const Params& p) {
    if (p.d < 4 || p.d > 2 * p.n - 2)
        return BoundValue::not_applicable("lp_dual_certificate", BoundKind::CertifiedUpper, detail::range_note("4 <= d <= 2n-2"));
    const LinearProgram lp = build_lp(p.n, p.q, p.s());
    const DualCheck check = verify_dual_feasible(lp, dual_certificate(p.n, p.q, p.s()));
    if (!check.feasible)
        return BoundValue::not_applicable("lp_dual_certificate", BoundKind::CertifiedUpper, "certificate infeasible: " + check.violation);
    BoundValue b = BoundValue::upper("lp_dual_certificate", check.objective, "verified dual feasible");
    b.detail = "s=" + std::to_string(p.s());
    return b;
}

// ---------------------------------------------------------------------------

/// Every upper-type bound evaluated at p, in a fixed order.
inline std::vector<BoundValue> all_upper_bounds(const Params& p) {
    return {levenshtein_upper_best(p), bours_upper(p),        kk_upper(p),        thm25_upper(p),
            liu_xing_upper(p),         improved_liu_xing_upper(p), lwgz_upper(p), lp_optimum_upper(p),
            lp_dual_certificate_upper(p)};
}

/// Minimum integer value over applicable certified upper (or exact) bounds.
inline BoundValue best_upper(const Params& p) {
    const std::vector<BoundValue> all = all_upper_bounds(p);
    std::optional<Integer> best;
    bool exact = false;
    for (const auto& b : all) {
        if (!b.bounds_above()) continue;
        if (!best || *b.integer_value < *best) {
            best = *b.integer_value;
            exact = false;
        }
        if (*b.integer_value == *best && b.kind == BoundKind::Exact) exact = true;
    }
    if (!best) return BoundValue::not_applicable("best_upper", BoundKind::CertifiedUpper, "no applicable bound");
    BoundValue out = exact ? BoundValue::exact("best_upper", *best) : BoundValue::upper("best_upper", Rational(*best));
    std::string from;
    for (const auto& b : all)
        if (b.bounds_above() && *b.integer_value == *best) from += (from.empty() ? "" : ",") + b.name;
    out.detail = from;
    return out;
}

}  // namespace dq
