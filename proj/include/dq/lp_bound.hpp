#pragma once

// The sphere-packing linear program for D_q(n, 2n-2s): variables x_i count
// codewords with exactly i distinct symbols. Includes an exact rational simplex,
// the closed-form dual points and an explicit dual-feasibility checker.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dq/combinat.hpp"

namespace dq {

// ---------------------------------------------------------------------------
// Generic exact simplex for: maximize c.x subject to A x <= b, x >= 0, b >= 0.

struct LpSolution {
    Rational optimum;
    std::vector<Rational> x;
    /// Optimal dual values, one per constraint row.
    std::vector<Rational> duals;
    std::int64_t pivots = 0;
};

namespace detail {

// Dense tableau with slack basis; Bland's rule (lowest index entering, lowest
// basic index among ratio ties leaving) guarantees termination.
inline LpSolution simplex_max(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                              const std::vector<Rational>& c) {
    const std::size_t m = A.size();
    const std::size_t nv = c.size();
    for (const auto& row : A)
        if (row.size() != nv) throw std::invalid_argument("simplex: ragged constraint matrix");
    if (b.size() != m) throw std::invalid_argument("simplex: rhs size mismatch");
    for (const auto& v : b)
        if (v < 0) throw std::domain_error("simplex: negative right-hand side (origin infeasible)");

    const std::size_t cols = nv + m;
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < nv; ++j) T[r][j] = A[r][j];
        T[r][nv + r] = 1;
        T[r][cols] = b[r];
        basis[r] = nv + r;
    }
    // Reduced cost row: z_j - c_j.
    std::vector<Rational> z(cols + 1);
    for (std::size_t j = 0; j < nv; ++j) z[j] = -c[j];

    LpSolution sol;
    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t r = 0; r < m; ++r) {
            if (T[r][enter] <= 0) continue;
            Rational ratio = T[r][cols] / T[r][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == m) throw std::logic_error("simplex: objective unbounded");

        const Rational piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || T[r][enter] == 0) continue;
            const Rational f = T[r][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                if (T[leave][j] != 0) T[r][j] -= f * T[leave][j];
        }
        if (z[enter] != 0) {
            const Rational f = z[enter];
            for (std::size_t j = 0; j <= cols; ++j)
                if (T[leave][j] != 0) z[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
        ++sol.pivots;
    }

    sol.x.assign(nv, Rational(0));
    for (std::size_t r = 0; r < m; ++r)
        if (basis[r] < nv) sol.x[basis[r]] = T[r][cols];
    sol.optimum = z[cols];
    sol.duals.assign(m, Rational(0));
    for (std::size_t r = 0; r < m; ++r) sol.duals[r] = z[nv + r];
    return sol;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The sphere-packing model.

/// a_{i,j} = C(i+j-(s+1), 2j-(s+1)), zero when either argument is negative.
inline Integer lp_a(std::int64_t i, std::int64_t j, std::int64_t s) {
    const std::int64_t top = i + j - (s + 1);
    const std::int64_t bottom = 2 * j - (s + 1);
    if (top < 0 || bottom < 0) return 0;
    return binomial(top, bottom);
}

/// b_j = C(q,j) times the number of surjections of an (s+1)-set onto j symbols:
/// the count of words in [q]^{s+1} with exactly j distinct symbols.
inline Integer lp_b(std::int64_t q, std::int64_t j, std::int64_t s) {
    return binomial(q, j) * surjection_count(s + 1, j);
}

/// ceil((s+1)/2), the first index with its own constraint row.
inline std::int64_t lp_first_row(std::int64_t s) { return (s + 2) / 2; }

struct LpRow {
    std::string label;
    /// Row index j, or 0 for the aggregate row over small supports.
    std::int64_t j = 0;
    /// (variable i, coefficient), i in [1, n].
    std::vector<std::pair<std::int64_t, Integer>> coeffs;
    Integer rhs;
};

struct LinearProgram {
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::int64_t s = 0;
    std::vector<LpRow> rows;

    std::int64_t num_vars() const { return n; }

    Integer coefficient(const LpRow& row, std::int64_t i) const {
        for (const auto& [var, a] : row.coeffs)
            if (var == i) return a;
        return 0;
    }
};

inline LinearProgram build_lp(std::int64_t n, std::int64_t q, std::int64_t s) {
    if (q < 2) throw std::domain_error("build_lp: q must be at least 2");
    if (s < 1 || s > n - 2) throw std::domain_error("build_lp: need 1 <= s <= n-2");
    LinearProgram lp{n, q, s, {}};
    const std::int64_t c = lp_first_row(s);
    if (c - 1 >= 1) {
        LpRow agg;
        agg.label = "small_support";
        agg.j = 0;
        agg.rhs = 0;
        for (std::int64_t i = 1; i <= c - 1; ++i) agg.coeffs.emplace_back(i, Integer(1));
        for (std::int64_t j = 1; j <= c - 1; ++j) agg.rhs += lp_b(q, j, s);
        lp.rows.push_back(std::move(agg));
    }
    for (std::int64_t j = c; j <= s + 1; ++j) {
        LpRow row;
        row.label = "support_" + std::to_string(j);
        row.j = j;
        row.rhs = lp_b(q, j, s);
        for (std::int64_t i = j; i <= n + j - (s + 1); ++i) {
            Integer a = lp_a(i, j, s);
            if (a != 0) row.coeffs.emplace_back(i, std::move(a));
        }
        lp.rows.push_back(std::move(row));
    }
    return lp;
}

inline LpSolution solve_lp(const LinearProgram& lp) {
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (const auto& row : lp.rows) {
        std::vector<Rational> dense(static_cast<std::size_t>(lp.n), Rational(0));
        for (const auto& [i, a] : row.coeffs) dense[static_cast<std::size_t>(i - 1)] = Rational(a);
        A.push_back(std::move(dense));
        b.emplace_back(row.rhs);
    }
    std::vector<Rational> c(static_cast<std::size_t>(lp.n), Rational(1));
    return detail::simplex_max(A, b, c);
}

/// The optimum M, an upper bound on D_q(n, 2n-2s).
inline Rational solve_lp_exact(const LinearProgram& lp) { return solve_lp(lp).optimum; }

// ---------------------------------------------------------------------------
// Dual certificates.

struct DualCertificate {
    Rational y0;
    /// y_j for j in [ceil((s+1)/2), s+1]; missing entries are zero.
    std::map<std::int64_t, Rational> y;

    Rational get(std::int64_t j) const {
        auto it = y.find(j);
        return it == y.end() ? Rational(0) : it->second;
    }
};

inline Rational inverse(const Integer& a) {
    if (a == 0) throw std::domain_error("dual certificate: zero coefficient inverted");
    return Rational(Integer(1), a);
}

/// Closed-form dual point; its objective at s = 1 rounds up to the same integer as thm25_eq7.
inline DualCertificate dual_certificate(std::int64_t n, std::int64_t q, std::int64_t s) {
    (void)q;  // the certificate does not depend on q; only the objective does
    if (s < 1 || s > n - 2) throw std::domain_error("dual_certificate: need 1 <= s <= n-2");
    DualCertificate cert;
    if (s == 1) {
        cert.y0 = 0;
        cert.y[1] = inverse(lp_a(1, 1, s));
        cert.y[2] = inverse(lp_a(n, 2, s));
        return cert;
    }
    if (s == 2) {
        cert.y0 = 1;
        cert.y[2] = inverse(lp_a(2, 2, s));
        cert.y[3] = inverse(lp_a(n, 3, s));
        return cert;
    }
    const std::int64_t c = lp_first_row(s);
    cert.y0 = 1;
    cert.y[c] = inverse(lp_a(c, c, s));
    cert.y[s + 1] = inverse(lp_a(n, s + 1, s));
    cert.y[s] = inverse(lp_a(n - 1, s, s)) * (Rational(1) - Rational(lp_a(n - 1, s + 1, s), lp_a(n, s + 1, s)));
    for (std::int64_t j = c + 1; j <= s - 1; ++j) cert.y[j] = inverse(lp_a(n + j - (s + 1), j, s));
    return cert;
}

struct DualCheck {
    bool feasible = false;
    Rational objective;
    /// Human-readable reason for the first violated condition.
    std::string violation;
};

/// Checks the dual constraints written out per variable i:
///   i <  c               : y0 >= 1
///   c <= i <= n - fl     : sum_{j=c}^{min(i,s+1)} a_{i,j} y_j >= 1
///   i >  n - fl          : sum_{j=i+s+1-n}^{min(i,s+1)} a_{i,j} y_j >= 1
/// with c = ceil((s+1)/2), fl = floor((s+1)/2), plus non-negativity.
inline DualCheck verify_dual_feasible(const LinearProgram& lp, const DualCertificate& cert) {
    const std::int64_t n = lp.n, s = lp.s, q = lp.q;
    const std::int64_t c = lp_first_row(s);
    const std::int64_t fl = (s + 1) / 2;
    DualCheck out;

    out.objective = 0;
    for (std::int64_t j = 1; j <= c - 1; ++j) out.objective += Rational(lp_b(q, j, s)) * cert.y0;
    for (std::int64_t j = c; j <= s + 1; ++j) out.objective += Rational(lp_b(q, j, s)) * cert.get(j);

    auto fail = [&](std::string why) {
        out.feasible = false;
        out.violation = std::move(why);
        return out;
    };

    for (const auto& [j, v] : cert.y)
        if (j < c || j > s + 1) return fail("y_" + std::to_string(j) + " outside the dual index range");
    if (cert.y0 < 0) return fail("y0 negative");
    for (const auto& [j, v] : cert.y)
        if (v < 0) return fail("y_" + std::to_string(j) + " negative");
    if (s >= 2 && cert.y0 < 1) return fail("y0 < 1 while s >= 2");

    for (std::int64_t i = 1; i <= n; ++i) {
        if (i < c) continue;  // covered by the y0 condition
        const std::int64_t lo = (i <= n - fl) ? c : i + s + 1 - n;
        const std::int64_t hi = std::min(i, s + 1);
        Rational lhs = 0;
        for (std::int64_t j = lo; j <= hi; ++j) lhs += Rational(lp_a(i, j, s)) * cert.get(j);
        if (lhs < 1) return fail("dual constraint for x_" + std::to_string(i) + " has value " + to_string(lhs) + " < 1");
    }
    out.feasible = true;
    return out;
}

// ---------------------------------------------------------------------------
// CPLEX LP-format dump. All coefficients are integers already.

inline void write_lp_format(std::ostream& os, const LinearProgram& lp) {
    os << "\\ sphere-packing LP n=" << lp.n << " q=" << lp.q << " s=" << lp.s << "\n";
    os << "Maximize\n obj:";
    for (std::int64_t i = 1; i <= lp.n; ++i) os << (i == 1 ? " " : " + ") << "x" << i;
    os << "\nSubject To\n";
    for (const auto& row : lp.rows) {
        os << " " << row.label << ":";
        bool first = true;
        for (const auto& [i, a] : row.coeffs) {
            os << (first ? " " : " + ");
            if (a != 1) os << a.str() << " ";
            os << "x" << i;
            first = false;
        }
        if (row.coeffs.empty()) os << " 0 x1";
        os << " <= " << row.rhs.str() << "\n";
    }
    os << "Bounds\n";
    for (std::int64_t i = 1; i <= lp.n; ++i) os << " x" << i << " >= 0\n";
    os << "End\n";
}

inline std::string lp_format_string(const LinearProgram& lp) {
    std::ostringstream os;
    write_lp_format(os, lp);
    return os.str();
}

}  // namespace dq
