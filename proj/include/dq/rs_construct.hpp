#pragma once

// Reed-Solomon codes over prime fields and the greedy independent-set
// construction of insdel codes inside them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dq/bound_value.hpp"
#include "dq/code.hpp"
#include "dq/combinat.hpp"
#include "dq/words.hpp"

namespace dq {

class UnsupportedError : public std::invalid_argument {
public:
    explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

inline bool is_prime(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

namespace modq {
inline std::int64_t norm(std::int64_t a, std::int64_t q) { return ((a % q) + q) % q; }
inline std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t q) { return norm(a * b, q); }
inline std::int64_t pow(std::int64_t a, std::int64_t e, std::int64_t q) {
    std::int64_t r = 1;
    a = norm(a, q);
    while (e > 0) {
        if (e & 1) r = mul(r, a, q);
        a = mul(a, a, q);
        e >>= 1;
    }
    return r;
}
inline std::int64_t inv(std::int64_t a, std::int64_t q) {
    if (norm(a, q) == 0) throw std::domain_error("modq::inv: zero has no inverse");
    return pow(a, q - 2, q);
}
}  // namespace modq

struct RSSpec {
    std::int64_t q = 0;
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::vector<std::int64_t> eval_points;

    /// Validates; default evaluation points are 0, 1, ..., n-1.
    static RSSpec make(std::int64_t q, std::int64_t n, std::int64_t k, std::vector<std::int64_t> alpha = {}) {
        if (!is_prime(q)) throw UnsupportedError("q must be prime (got " + std::to_string(q) + ")");
        if (n < 1 || n > q) throw std::domain_error("RS code needs 1 <= n <= q");
        if (k < 1 || k > n) throw std::domain_error("RS code needs 1 <= k <= n");
        if (alpha.empty()) {
            alpha.resize(static_cast<std::size_t>(n));
            std::iota(alpha.begin(), alpha.end(), 0);
        }
        if (static_cast<std::int64_t>(alpha.size()) != n) throw std::domain_error("RS code needs exactly n evaluation points");
        std::set<std::int64_t> seen;
        for (auto a : alpha) {
            if (a < 0 || a >= q) throw std::domain_error("evaluation point outside [0, q-1]");
            if (!seen.insert(a).second) throw std::domain_error("evaluation points must be distinct");
        }
        return RSSpec{q, n, k, std::move(alpha)};
    }

    std::string alpha_string() const {
        std::string s;
        for (std::size_t i = 0; i < eval_points.size(); ++i) s += (i ? "," : "") + std::to_string(eval_points[i]);
        return s;
    }
};

/// Evaluates the polynomial with coefficients f (f[0] constant term) at x.
inline std::int64_t rs_eval(const std::vector<std::int64_t>& f, std::int64_t x, std::int64_t q) {
    std::int64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = modq::norm(acc * x + f[i], q);
    return acc;
}

inline Word rs_encode(const RSSpec& spec, const std::vector<std::int64_t>& coeffs) {
    std::vector<Symbol> s;
    s.reserve(spec.eval_points.size());
    for (auto a : spec.eval_points) s.push_back(static_cast<Symbol>(rs_eval(coeffs, a, spec.q)));
    return Word(std::move(s), static_cast<std::uint32_t>(spec.q));
}

/// Calls visit(codeword) for all q^k codewords; coefficient tuples run in
/// lexicographic order with f_0 as the most significant digit.
inline void rs_for_each(const RSSpec& spec, const std::function<void(const Word&)>& visit,
                        std::uint64_t cap = kDefaultEnumerationCap) {
    const std::uint64_t total = word_count(static_cast<std::uint32_t>(spec.q), static_cast<std::size_t>(spec.k), cap);
    std::vector<std::int64_t> f(static_cast<std::size_t>(spec.k), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = f.size(); i-- > 0;) {
            f[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(spec.q));
            rest /= static_cast<std::uint64_t>(spec.q);
        }
        visit(rs_encode(spec, f));
    }
}

inline std::vector<Word> rs_generate(const RSSpec& spec, std::uint64_t cap = kDefaultEnumerationCap) {
    std::vector<Word> out;
    rs_for_each(spec, [&](const Word& w) { out.push_back(w); }, cap);
    return out;
}

/// Number of codewords that repeat some length-lambda window.
inline std::int64_t count_lambda_repeating(const RSSpec& spec, std::int64_t lambda, std::uint64_t cap = kDefaultEnumerationCap) {
    std::int64_t count = 0;
    rs_for_each(spec, [&](const Word& w) {
        if (!is_lambda_nonrepeating(w, lambda)) ++count;
    }, cap);
    return count;
}

/// Coefficients (constant term first) of the unique polynomial of degree < |xs|
/// through the points (xs[i], ys[i]) over F_q.
inline std::vector<std::int64_t> lagrange_interpolate(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys,
                                                      std::int64_t q) {
    if (xs.size() != ys.size()) throw std::invalid_argument("lagrange_interpolate: size mismatch");
    const std::size_t k = xs.size();
    std::vector<std::int64_t> result(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<std::int64_t> basis{1};
        std::int64_t denom = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            std::vector<std::int64_t> next(basis.size() + 1, 0);
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] = modq::norm(next[t + 1] + basis[t], q);
                next[t] = modq::norm(next[t] - basis[t] * xs[j], q);
            }
            basis = std::move(next);
            denom = modq::mul(denom, xs[i] - xs[j], q);
        }
        const std::int64_t scale = modq::mul(ys[i], modq::inv(denom, q), q);
        for (std::size_t t = 0; t < k; ++t) result[t] = modq::norm(result[t] + basis[t] * scale, q);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Degree bounds for the conflict graph restricted to an RS code.

/// C(n, n-d/2+1)^2, independent of q.
inline Integer gamma_degree_bound(std::int64_t n, std::int64_t d) {
    if (d < 4 || d > 2 * n - 2 || d % 2 != 0) throw std::domain_error("gamma_degree_bound: need even 4 <= d <= 2n-2");
    const Integer c = binomial(n, n - d / 2 + 1);
    return c * c;
}

/// Largest number of codewords within distance d-2 of a codeword.
inline std::int64_t rs_conflict_max_degree(const RSSpec& spec, std::int64_t d, std::uint64_t cap = kDefaultEnumerationCap) {
    const std::vector<Word> words = rs_generate(spec, cap);
    std::int64_t best = 0;
    for (std::size_t a = 0; a < words.size(); ++a) {
        std::int64_t deg = 0;
        for (std::size_t b = 0; b < words.size(); ++b)
            if (a != b && edit_distance(words[a], words[b]) <= d - 2) ++deg;
        best = std::max(best, deg);
    }
    return best;
}

/// 2^{5(d-2)} d (e n/(d-2))^{(3d-6)/2}; report-only outside 6 <= d <= n/9+2.
inline BoundValue neighborhood_edge_bound(std::int64_t n, std::int64_t d) {
    if (d <= 2 || n < 1) throw std::domain_error("neighborhood_edge_bound: need d > 2 and n >= 1");
    using boost::multiprecision::exp;
    using boost::multiprecision::pow;
    const Real base = exp(Real(1)) * Real(n) / Real(d - 2);
    const Real value = Real(ipow(2, 5 * (d - 2))) * Real(d) * pow(base, Real(3 * d - 6) / 2);
    BoundValue b = BoundValue::estimate("neighborhood_edge_bound", value, "stated for 6 <= d <= n/9+2, lambda = 3");
    if (!(6 <= d && 9 * (d - 2) <= n)) {
        b.applicable = false;
        b.report_only = true;
    }
    return b;
}

// ---------------------------------------------------------------------------
// Construction.

enum class RsOrder { Generation, MinDegree };

inline Code construct_insdel_code_rs(const RSSpec& spec, std::int64_t d, std::int64_t lambda = 3,
                                     RsOrder order = RsOrder::Generation, std::uint64_t cap = kDefaultEnumerationCap) {
    if (d < 2 || d % 2 != 0 || d > 2 * spec.n) throw std::domain_error("construct_insdel_code_rs: need even 2 <= d <= 2n");
    if (spec.k != spec.n - d / 2 + 1)
        throw std::invalid_argument("construct_insdel_code_rs: dimension must be k = n - d/2 + 1");
    if (lambda < 1 || lambda > spec.n) throw std::domain_error("construct_insdel_code_rs: need 1 <= lambda <= n");

    std::vector<Word> candidates;
    rs_for_each(spec, [&](const Word& w) {
        if (is_lambda_nonrepeating(w, lambda)) candidates.push_back(w);
    }, cap);

    if (order == RsOrder::MinDegree) {
        std::vector<std::int64_t> degree(candidates.size(), 0);
        for (std::size_t a = 0; a < candidates.size(); ++a)
            for (std::size_t b = a + 1; b < candidates.size(); ++b)
                if (edit_distance(candidates[a], candidates[b]) < d) {
                    ++degree[a];
                    ++degree[b];
                }
        std::vector<std::size_t> idx(candidates.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return degree[x] < degree[y]; });
        std::vector<Word> sorted;
        sorted.reserve(idx.size());
        for (auto i : idx) sorted.push_back(candidates[i]);
        candidates = std::move(sorted);
    }

    Code code;
    code.n = static_cast<std::size_t>(spec.n);
    code.q = static_cast<std::uint32_t>(spec.q);
    code.provenance = "rs-independent-set k=" + std::to_string(spec.k) + " lambda=" + std::to_string(lambda) +
                      " alpha=" + spec.alpha_string() + (order == RsOrder::MinDegree ? " order=min-degree" : " order=generation");
    for (Word& w : candidates) {
        bool ok = true;
        for (const Word& c : code.words)
            if (edit_distance(w, c) < d) {
                ok = false;
                break;
            }
        if (ok) code.words.push_back(std::move(w));
    }
    certify_code(code, d);
    return code;
}

}  // namespace dq
