#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "dq/combinat.hpp"

namespace dq {

/// Parameters (n, q, d) of an insdel code family. Odd d is rounded up to the
/// next even value, since equal-length words are always at even distance.
struct Params {
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::int64_t d = 0;
    std::int64_t requested_d = 0;
    bool d_normalized = false;

    static Params make(std::int64_t n, std::int64_t q, std::int64_t d) {
        if (n < 2) throw std::invalid_argument("n must be at least 2");
        if (q < 2) throw std::invalid_argument("q must be at least 2");
        if (d < 1) throw std::invalid_argument("d must be positive");
        Params p{n, q, d, d, false};
        if (d % 2 != 0) {
            p.d = d + 1;
            p.d_normalized = true;
        }
        if (p.d > 2 * n) throw std::invalid_argument("d must not exceed 2n");
        return p;
    }

    std::int64_t half_d() const { return d / 2; }
    /// s = n - d/2, the index of the sphere-packing LP.
    std::int64_t s() const { return n - d / 2; }
    /// t = d/2 - 1, the number of correctable deletions.
    std::int64_t t() const { return d / 2 - 1; }

    std::string str() const {
        return "n=" + std::to_string(n) + " q=" + std::to_string(q) + " d=" + std::to_string(d);
    }

    friend bool operator==(const Params& a, const Params& b) { return a.n == b.n && a.q == b.q && a.d == b.d; }
};

enum class BoundKind { CertifiedUpper, CertifiedLower, Estimate, Exact };

inline const char* kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::CertifiedUpper: return "CertifiedUpper";
        case BoundKind::CertifiedLower: return "CertifiedLower";
        case BoundKind::Estimate: return "Estimate";
        case BoundKind::Exact: return "Exact";
    }
    return "?";
}

inline BoundKind kind_from_name(const std::string& s) {
    if (s == "CertifiedUpper") return BoundKind::CertifiedUpper;
    if (s == "CertifiedLower") return BoundKind::CertifiedLower;
    if (s == "Estimate") return BoundKind::Estimate;
    if (s == "Exact") return BoundKind::Exact;
    throw std::invalid_argument("unknown bound kind '" + s + "'");
}

inline bool is_certified(BoundKind k) { return k != BoundKind::Estimate; }

/// A named bound on D_q(n,d).
///
/// `value` holds the exact rational when the formula is rational; `approx` holds
/// a 50-digit evaluation (always present for Estimates). `integer_value` is the
/// floor for uppers, the ceiling for lowers and absent for Estimates. A
/// non-applicable bound may still carry `approx` when `report_only` is set.
struct BoundValue {
    std::string name;
    BoundKind kind = BoundKind::CertifiedUpper;
    bool applicable = false;
    bool report_only = false;
    std::optional<Rational> value;
    std::optional<Real> approx;
    std::optional<Integer> integer_value;
    std::string condition_note;
    std::string detail;

    static BoundValue not_applicable(std::string name, BoundKind kind, std::string note) {
        BoundValue b;
        b.name = std::move(name);
        b.kind = kind;
        b.condition_note = std::move(note);
        return b;
    }

    static BoundValue upper(std::string name, const Rational& v, std::string note = {}) {
        BoundValue b;
        b.name = std::move(name);
        b.kind = BoundKind::CertifiedUpper;
        b.applicable = true;
        b.value = v;
        b.approx = to_real(v);
        b.integer_value = floor_of(v);
        b.condition_note = std::move(note);
        return b;
    }

    static BoundValue lower(std::string name, const Rational& v, std::string note = {}) {
        BoundValue b = upper(std::move(name), v, std::move(note));
        b.kind = BoundKind::CertifiedLower;
        b.integer_value = ceil_of(v);
        return b;
    }

    static BoundValue exact(std::string name, const Integer& v, std::string note = {}) {
        BoundValue b = upper(std::move(name), Rational(v), std::move(note));
        b.kind = BoundKind::Exact;
        return b;
    }

    static BoundValue estimate(std::string name, const Real& v, std::string note = {}) {
        BoundValue b;
        b.name = std::move(name);
        b.kind = BoundKind::Estimate;
        b.applicable = true;
        b.approx = v;
        b.condition_note = std::move(note);
        return b;
    }

    static BoundValue estimate(std::string name, const Rational& v, std::string note = {}) {
        BoundValue b = estimate(std::move(name), to_real(v), std::move(note));
        b.value = v;
        return b;
    }

    /// Upper-type bounds (CertifiedUpper and Exact) limit D from above.
    bool bounds_above() const {
        return applicable && (kind == BoundKind::CertifiedUpper || kind == BoundKind::Exact);
    }
    bool bounds_below() const {
        return applicable && (kind == BoundKind::CertifiedLower || kind == BoundKind::Exact);
    }

    std::string value_string() const {
        if (value) return to_string(*value);
        if (approx) return to_string(*approx);
        return "-";
    }
};

}  // namespace dq
