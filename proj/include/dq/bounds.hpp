#pragma once

// Every bound at one parameter point, in a fixed order.

#include <optional>
#include <vector>

#include "dq/bound_value.hpp"
#include "dq/lower_bounds.hpp"
#include "dq/rs_construct.hpp"
#include "dq/upper_bounds.hpp"

namespace dq {

struct BoundReport {
    Params params;
    std::vector<BoundValue> bounds;
    /// Quantities that are not bounds on D itself (degree bounds, envelopes).
    std::vector<BoundValue> diagnostics;
    BoundValue best_upper;
    BoundValue best_lower;
};

inline BoundValue best_lower_of(const std::vector<BoundValue>& all) {
    std::optional<Integer> best;
    std::string from;
    for (const auto& b : all) {
        if (!b.bounds_below()) continue;
        if (!best || *b.integer_value > *best) {
            best = *b.integer_value;
            from = b.name;
        } else if (*b.integer_value == *best) {
            from += "," + b.name;
        }
    }
    if (!best) return BoundValue::not_applicable("best_lower", BoundKind::CertifiedLower, "no applicable bound");
    BoundValue out = BoundValue::lower("best_lower", Rational(*best));
    out.detail = from;
    return out;
}

inline BoundReport evaluate_bounds(const Params& p) {
    BoundReport r;
    r.params = p;
    r.bounds = all_upper_bounds(p);
    r.bounds.push_back(gv_lower(p));
    r.bounds.push_back(matching_main_term(p));
    r.bounds.push_back(refined_gv_estimate(p));
    r.best_upper = best_upper(p);
    r.best_lower = best_lower_of(r.bounds);

    if (p.d >= 4 && p.d <= 2 * p.n - 2) {
        r.diagnostics.push_back(BoundValue::estimate("levenshtein_envelope", levenshtein_envelope(p),
                                                     "lower envelope of levenshtein_eq3 over r"));
        BoundValue g = BoundValue::upper("gamma_degree_bound", Rational(gamma_degree_bound(p.n, p.d)),
                                         "max degree of the conflict graph on an RS code with k = n-d/2+1");
        r.diagnostics.push_back(g);
        r.diagnostics.push_back(refined_gv_log_branch(p));
    }
    if (p.d > 2) r.diagnostics.push_back(neighborhood_edge_bound(p.n, p.d));
    return r;
}

}  // namespace dq
