#pragma once

// Lower bounds on D_q(n,d): the GV-type counting bound, the deletion
// hypergraph (degree, codegree, greedy matching) and the asymptotic main-term
// estimates, which are always reported as Estimates.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "dq/bound_value.hpp"
#include "dq/code.hpp"
#include "dq/combinat.hpp"
#include "dq/distance_table.hpp"
#include "dq/words.hpp"

namespace dq {

inline BoundValue gv_lower(const Params& p) {
    const std::int64_t n = p.n, q = p.q, h = p.half_d();
    if (p.d < 4 || p.d > 2 * n - 2) return BoundValue::not_applicable("gv", BoundKind::CertifiedLower, "requires 4 <= d <= 2n-2");
    Integer ball = 0;
    for (std::int64_t i = 0; i <= h - 1; ++i) ball += binomial(n, i) * ipow(q - 1, i);
    return BoundValue::lower("gv", Rational(ipow(q, n + h - 1), ball * ball));
}

// ---------------------------------------------------------------------------
// Deletion hypergraph: vertices [q]^{n-t}, one edge S_D(u,t) per u in [q]^n.

struct HypergraphSpec {
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::int64_t t = 0;

    void validate() const {
        if (q < 2) throw std::domain_error("hypergraph: q must be at least 2");
        if (t < 1 || t > n - 1) throw std::domain_error("hypergraph: need 1 <= t <= n-1");
    }
};

inline Integer hypergraph_degree(const HypergraphSpec& h) {
    h.validate();
    Integer total = 0;
    for (std::int64_t i = 0; i <= h.t; ++i) total += binomial(h.n, i) * ipow(h.q - 1, i);
    return total;
}

inline Integer hypergraph_codegree(const HypergraphSpec& h) {
    h.validate();
    Integer total = 0;
    for (std::int64_t i = 0; i <= h.t - 1; ++i) {
        const std::int64_t sign_factor = ((h.t - i) % 2 == 0) ? 0 : 2;  // 1 - (-1)^{t-i}
        total += binomial(h.n, i) * ipow(h.q - 1, i) * sign_factor;
    }
    return total;
}

/// Scans centers in lexicographic order and keeps u whenever S_D(u,t) misses
/// every sphere kept so far. The kept centers form a code of distance 2t+2.
inline Code greedy_matching_code(const HypergraphSpec& h, std::uint64_t cap = kDefaultEnumerationCap) {
    h.validate();
    const auto n = static_cast<std::size_t>(h.n);
    const auto q = static_cast<std::uint32_t>(h.q);
    const std::uint64_t total = word_count(q, n, cap);
    std::unordered_set<std::uint64_t> claimed;
    Code code;
    code.n = n;
    code.q = q;
    code.provenance = "greedy-hypergraph t=" + std::to_string(h.t);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Word u = word_from_index(idx, n, q);
        const WordSet edge = deletion_sphere(u, h.t);
        bool free = true;
        for (const Word& v : edge)
            if (claimed.count(word_index(v))) {
                free = false;
                break;
            }
        if (!free) continue;
        for (const Word& v : edge) claimed.insert(word_index(v));
        code.words.push_back(std::move(u));
    }
    certify_code(code, 2 * h.t + 2);
    return code;
}

// ---------------------------------------------------------------------------
// Asymptotic main terms (never certified).

inline BoundValue matching_main_term(const Params& p) {
    const std::int64_t n = p.n, q = p.q, h = p.half_d();
    if (p.d < 4 || p.d > 2 * n - 2)
        return BoundValue::not_applicable("matching_main_term", BoundKind::Estimate, "requires 4 <= d <= 2n-2");
    return BoundValue::estimate("matching_main_term", Rational(ipow(q, n - h + 1), binomial(n, h - 1)),
                                "main term as q grows, n and d fixed");
}

inline bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true;
}

inline Real euler_e() { return boost::multiprecision::exp(Real(1)); }

/// Branch for q >= n a prime power, natural-log form.
inline Real refined_gv_log_branch_value(const Params& p) {
    const std::int64_t n = p.n, q = p.q, h = p.half_d();
    using boost::multiprecision::log;
    const Real factor = Real(h - 1) * (log(Real(n)) - log(Real(p.d - 2)) - Real("8.1"));
    const Integer c = binomial(n, h - 1);
    return factor * Real(ipow(q, n - h + 1)) / Real(c * c);
}

/// Branch for fixed q, d: (d/2-1) q^{n-d/2+1} log2(n) / n^{d-2}.
inline Real refined_gv_fixed_branch_value(const Params& p) {
    const std::int64_t n = p.n, q = p.q, h = p.half_d();
    using boost::multiprecision::log;
    const Real log2n = log(Real(n)) / log(Real(2));
    return Real(h - 1) * Real(ipow(q, n - h + 1)) * log2n / Real(ipow(n, p.d - 2));
}

inline bool refined_gv_log_branch_applies(const Params& p) {
    if (p.d < 6 || p.q < p.n || !is_prime_power(p.q)) return false;
    // d < n / e^{8.1} + 2  <=>  (d - 2) e^{8.1} < n
    return Real(p.d - 2) * boost::multiprecision::exp(Real("8.1")) < Real(p.n);
}

/// Both branches of the refined GV estimate. The log branch is used when its
/// hypotheses hold; otherwise the fixed-(q,d) branch for d >= 6.
inline BoundValue refined_gv_estimate(const Params& p) {
    if (p.d < 6) return BoundValue::not_applicable("refined_gv", BoundKind::Estimate, "requires d >= 6");
    if (refined_gv_log_branch_applies(p)) {
        BoundValue b = BoundValue::estimate("refined_gv", refined_gv_log_branch_value(p), "asymptotic in n; q >= n prime power");
        b.detail = "log branch";
        return b;
    }
    BoundValue b = BoundValue::estimate("refined_gv", refined_gv_fixed_branch_value(p), "asymptotic in n; q, d fixed");
    b.detail = "fixed branch";
    return b;
}

/// The log branch reported even when its hypotheses fail (report_only).
inline BoundValue refined_gv_log_branch(const Params& p) {
    if (p.d < 6 || p.d > 2 * p.n - 2)
        return BoundValue::not_applicable("refined_gv_log_branch", BoundKind::Estimate, "requires 6 <= d <= 2n-2");
    BoundValue b = BoundValue::estimate("refined_gv_log_branch", refined_gv_log_branch_value(p),
                                        "needs q >= n prime power and 6 <= d < n/e^8.1 + 2");
    if (!refined_gv_log_branch_applies(p)) {
        b.applicable = false;
        b.report_only = true;
    }
    return b;
}

// ---------------------------------------------------------------------------
// Triple counting.

/// Explicit main terms of the triple-count bound:
///   n^{a+b+c} q^{n+2b+2c} (66a)^{2b+2c+1} (log2 n)^{2b+2c} + 3 q^{n+2a} n^{-4a}.
inline Real triangle_bound_eval(std::int64_t n, std::int64_t q, std::int64_t a, std::int64_t b, std::int64_t c) {
    if (!(n >= a && a >= b && b >= c && c >= 1)) throw std::domain_error("triangle_bound_eval: need n >= a >= b >= c >= 1");
    if (q < 2) throw std::domain_error("triangle_bound_eval: q must be at least 2");
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    const Real log2n = log(Real(n)) / log(Real(2));
    const std::int64_t e = 2 * b + 2 * c;
    const Real first = Real(ipow(n, a + b + c)) * Real(ipow(q, n + e)) * Real(ipow(66 * a, e + 1)) *
                       pow(log2n, Real(e));
    const Real second = Real(3) * Real(ipow(q, n + 2 * a)) / Real(ipow(n, 4 * a));
    return first + second;
}

/// Exact number of (u,v,w) in ([q]^n)^3 with d(u,v) <= a, d(u,w) <= b, d(v,w) <= c.
inline Integer count_good_triples_bruteforce(std::int64_t n, std::int64_t q, std::int64_t a, std::int64_t b,
                                             std::int64_t c, std::uint64_t cap = 1024) {
    if (n < 1 || q < 2) throw std::domain_error("count_good_triples_bruteforce: bad n or q");
    const auto table = distance_table(static_cast<std::size_t>(n), static_cast<std::uint32_t>(q), cap);
    const std::uint64_t N = table->size();
    std::uint64_t count = 0;
    for (std::uint64_t u = 0; u < N; ++u)
        for (std::uint64_t v = 0; v < N; ++v) {
            if ((*table)(u, v) > a) continue;
            for (std::uint64_t w = 0; w < N; ++w)
                if ((*table)(u, w) <= b && (*table)(v, w) <= c) ++count;
        }
    return Integer(count);
}

}  // namespace dq
