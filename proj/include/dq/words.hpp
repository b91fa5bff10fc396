#pragma once

// Words over the alphabet {0, ..., q-1}, LCS-based edit distance, deletion and
// insertion spheres, editing balls, insertion/deletion operation sequences and
// the lambda-nonrepeating / lambda-isolated predicates.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dq/combinat.hpp"

namespace dq {

using Symbol = std::uint32_t;

/// Thrown when an enumeration would exceed its configured cap.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

class Word {
public:
    Word() = default;

    Word(std::vector<Symbol> symbols, std::uint32_t q) : symbols_(std::move(symbols)), q_(q) {
        if (q_ < 2) throw std::domain_error("Word: alphabet size must be at least 2");
        for (Symbol s : symbols_)
            if (s >= q_) throw std::domain_error("Word: symbol " + std::to_string(s) + " not below q=" + std::to_string(q_));
    }

    Word(std::initializer_list<Symbol> symbols, std::uint32_t q) : Word(std::vector<Symbol>(symbols), q) {}

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    std::uint32_t alphabet_size() const { return q_; }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(symbols_[i]);
        }
        return out;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        if (auto c = a.q_ <=> b.q_; c != 0) return c;
        return a.symbols_ <=> b.symbols_;
    }

private:
    std::vector<Symbol> symbols_;
    std::uint32_t q_ = 2;
};

using WordSet = std::set<Word>;

namespace detail {
inline void require_same_alphabet(const Word& x, const Word& y) {
    if (x.alphabet_size() != y.alphabet_size()) throw std::domain_error("words over different alphabets");
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Enumeration of [q]^n in lexicographic order (index 0 is the all-zero word).

inline std::uint64_t word_count(std::uint32_t q, std::size_t n, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / q) throw ResourceError("q^n exceeds enumeration cap " + std::to_string(cap));
        total *= q;
    }
    if (total > cap) throw ResourceError("q^n exceeds enumeration cap " + std::to_string(cap));
    return total;
}

inline Word word_from_index(std::uint64_t index, std::size_t n, std::uint32_t q) {
    std::vector<Symbol> s(n);
    for (std::size_t i = n; i-- > 0;) {
        s[i] = static_cast<Symbol>(index % q);
        index /= q;
    }
    return Word(std::move(s), q);
}

inline std::uint64_t word_index(const Word& w) {
    std::uint64_t idx = 0;
    for (Symbol s : w) idx = idx * w.alphabet_size() + s;
    return idx;
}

inline std::vector<Word> all_words(std::size_t n, std::uint32_t q, std::uint64_t cap = std::uint64_t{1} << 20) {
    const std::uint64_t total = word_count(q, n, cap);
    std::vector<Word> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(word_from_index(i, n, q));
    return out;
}

// ---------------------------------------------------------------------------
// LCS and edit distance.

/// Length of a longest common subsequence (quadratic DP, one rolling row).
inline std::int64_t lcs(const Word& x, const Word& y) {
    detail::require_same_alphabet(x, y);
    std::vector<std::int64_t> row(y.size() + 1, 0);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        std::int64_t diag = 0;
        for (std::size_t j = 1; j <= y.size(); ++j) {
            std::int64_t up = row[j];
            row[j] = (x[i - 1] == y[j - 1]) ? diag + 1 : std::max(row[j], row[j - 1]);
            diag = up;
        }
    }
    return row[y.size()];
}

/// Insertion/deletion distance: |x| + |y| - 2 LCS(x, y).
inline std::int64_t edit_distance(const Word& x, const Word& y) {
    return static_cast<std::int64_t>(x.size() + y.size()) - 2 * lcs(x, y);
}

/// Number of maximal runs of equal symbols.
inline std::int64_t runs(const Word& u) {
    if (u.empty()) throw std::domain_error("runs: empty word");
    std::int64_t r = 1;
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i] != u[i - 1]) ++r;
    return r;
}

// ---------------------------------------------------------------------------
// Spheres and balls.

/// All distinct words obtained from u by deleting exactly t symbols.
inline WordSet deletion_sphere(const Word& u, std::int64_t t) {
    if (t < 0 || t > static_cast<std::int64_t>(u.size())) throw std::domain_error("deletion_sphere: t out of range");
    WordSet layer{u};
    for (std::int64_t step = 0; step < t; ++step) {
        WordSet next;
        for (const Word& w : layer) {
            const auto& s = w.symbols();
            for (std::size_t i = 0; i < s.size(); ++i) {
                // deleting any symbol of a run gives the same word
                if (i > 0 && s[i] == s[i - 1]) continue;
                std::vector<Symbol> v;
                v.reserve(s.size() - 1);
                v.insert(v.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
                v.insert(v.end(), s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end());
                next.emplace(std::move(v), u.alphabet_size());
            }
        }
        layer = std::move(next);
    }
    return layer;
}

/// Run-count bounds on |S_D(u,t)|: C(rho-t+1, t) <= |S_D| <= C(rho+t-1, t).
/// A negative top index gives 0.
inline Integer deletion_sphere_lower(std::int64_t rho, std::int64_t t) {
    return rho - t + 1 < 0 ? Integer(0) : binomial(rho - t + 1, t);
}
inline Integer deletion_sphere_upper(std::int64_t rho, std::int64_t t) {
    return rho + t - 1 < 0 ? Integer(0) : binomial(rho + t - 1, t);
}

/// All distinct words obtained from u by inserting exactly t symbols.
/// Enumerative; used to cross-check the closed form below.
inline WordSet insertion_sphere(const Word& u, std::int64_t t) {
    if (t < 0) throw std::domain_error("insertion_sphere: negative t");
    WordSet layer{u};
    const std::uint32_t q = u.alphabet_size();
    for (std::int64_t step = 0; step < t; ++step) {
        WordSet next;
        for (const Word& w : layer) {
            const auto& s = w.symbols();
            for (std::size_t pos = 0; pos <= s.size(); ++pos) {
                for (Symbol a = 0; a < q; ++a) {
                    std::vector<Symbol> v(s.begin(), s.end());
                    v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), a);
                    next.emplace(std::move(v), q);
                }
            }
        }
        layer = std::move(next);
    }
    return layer;
}

/// |S_I(u,t)| for any u of length n: sum_{i<=t} C(n+t, i) (q-1)^i.
inline Integer insertion_sphere_size(std::int64_t n, std::int64_t t, std::int64_t q) {
    if (n < 0 || t < 0 || q < 2) throw std::domain_error("insertion_sphere_size: bad arguments");
    Integer total = 0;
    for (std::int64_t i = 0; i <= t; ++i) total += binomial(n + t, i) * ipow(q - 1, i);
    return total;
}

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// Same-length words within edit distance `radius` of u, by scanning [q]^n.
inline WordSet editing_ball(const Word& u, std::int64_t radius, std::uint64_t cap = kDefaultEnumerationCap) {
    if (radius % 2 != 0) throw std::domain_error("editing_ball: radius must be even");
    if (radius < 0 || radius > 2 * static_cast<std::int64_t>(u.size()))
        throw std::domain_error("editing_ball: radius out of range");
    const std::uint64_t total = word_count(u.alphabet_size(), u.size(), cap);
    WordSet ball;
    for (std::uint64_t i = 0; i < total; ++i) {
        Word v = word_from_index(i, u.size(), u.alphabet_size());
        if (edit_distance(u, v) <= radius) ball.insert(std::move(v));
    }
    return ball;
}

// ---------------------------------------------------------------------------
// Operation sequences.
//
// Positions are 1-based positions in the ORIGINAL word. Entries are stored in
// application order with non-increasing positions, so an earlier operation
// never shifts the location of a later one. Insert at p places the new symbol
// right after u_p (p = 0 means before u_1). A delete must be strictly to the
// right of the next entry.

struct Op {
    enum class Kind { Delete, Insert };
    std::int64_t position = 0;
    Kind kind = Kind::Delete;
    Symbol symbol = 0;

    static Op del(std::int64_t p) { return {p, Kind::Delete, 0}; }
    static Op ins(std::int64_t p, Symbol s) { return {p, Kind::Insert, s}; }

    friend bool operator==(const Op&, const Op&) = default;
};

class OpSequence {
public:
    OpSequence() = default;
    OpSequence(std::initializer_list<Op> ops) : entries_(ops) {}
    explicit OpSequence(std::vector<Op> ops) : entries_(std::move(ops)) {}

    const std::vector<Op>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    std::vector<std::int64_t> positions() const {
        std::vector<std::int64_t> out;
        out.reserve(entries_.size());
        for (const Op& op : entries_) out.push_back(op.position);
        return out;
    }

    std::int64_t insertions() const {
        return std::count_if(entries_.begin(), entries_.end(), [](const Op& o) { return o.kind == Op::Kind::Insert; });
    }
    std::int64_t deletions() const { return static_cast<std::int64_t>(entries_.size()) - insertions(); }

    /// Throws std::domain_error describing the first violation, if any.
    void validate(std::size_t word_length, std::uint32_t q) const {
        const auto n = static_cast<std::int64_t>(word_length);
        for (std::size_t j = 0; j < entries_.size(); ++j) {
            const Op& op = entries_[j];
            if (op.position < 0 || op.position > n)
                throw std::domain_error("op position " + std::to_string(op.position) + " outside [0," + std::to_string(n) + "]");
            if (j + 1 < entries_.size() && entries_[j + 1].position > op.position)
                throw std::domain_error("op positions must be non-increasing");
            if (op.kind == Op::Kind::Delete) {
                if (op.position == 0) throw std::domain_error("delete at position 0");
                if (j + 1 < entries_.size() && entries_[j + 1].position >= op.position)
                    throw std::domain_error("delete position must exceed the next position");
            } else if (op.symbol >= q) {
                throw std::domain_error("inserted symbol not below q");
            }
        }
    }

private:
    std::vector<Op> entries_;
};

inline Word apply_ops(const Word& u, const OpSequence& ops) {
    ops.validate(u.size(), u.alphabet_size());
    std::vector<Symbol> s = u.symbols();
    for (const Op& op : ops.entries()) {
        if (op.kind == Op::Kind::Delete)
            s.erase(s.begin() + (op.position - 1));
        else
            s.insert(s.begin() + op.position, op.symbol);
    }
    return Word(std::move(s), u.alphabet_size());
}

/// Counts entries i with lambda < i < n - lambda and no OTHER entry j with
/// |j - i| <= 2 lambda. Repeated positions disqualify each other.
inline std::int64_t count_lambda_isolated(std::span<const std::int64_t> positions, std::int64_t n, std::int64_t lambda) {
    std::int64_t count = 0;
    for (std::size_t a = 0; a < positions.size(); ++a) {
        const std::int64_t i = positions[a];
        if (!(lambda < i && i < n - lambda)) continue;
        bool isolated = true;
        for (std::size_t b = 0; b < positions.size() && isolated; ++b)
            if (b != a && std::abs(positions[b] - i) <= 2 * lambda) isolated = false;
        if (isolated) ++count;
    }
    return count;
}

inline std::int64_t count_lambda_isolated(const std::set<std::int64_t>& positions, std::int64_t n, std::int64_t lambda) {
    std::vector<std::int64_t> v(positions.begin(), positions.end());
    return count_lambda_isolated(std::span<const std::int64_t>(v), n, lambda);
}

/// True iff all length-lambda windows of u (overlapping ones included) differ.
inline bool is_lambda_nonrepeating(const Word& u, std::int64_t lambda) {
    const auto n = static_cast<std::int64_t>(u.size());
    if (lambda < 1 || lambda > n) throw std::domain_error("is_lambda_nonrepeating: lambda out of range");
    std::set<std::vector<Symbol>> seen;
    const auto& s = u.symbols();
    for (std::int64_t start = 0; start + lambda <= n; ++start) {
        std::vector<Symbol> window(s.begin() + start, s.begin() + start + lambda);
        if (!seen.insert(std::move(window)).second) return false;
    }
    return true;
}

inline std::int64_t distinct_symbols(const Word& u) {
    std::set<Symbol> s(u.begin(), u.end());
    return static_cast<std::int64_t>(s.size());
}

/// Distinct length-m subsequences of c, bucketed by their number of distinct symbols.
inline std::map<std::int64_t, std::int64_t> subsequence_support_profile(const Word& c, std::int64_t m) {
    const auto n = static_cast<std::int64_t>(c.size());
    if (m < 1 || m > n) throw std::domain_error("subsequence_support_profile: m out of range");
    std::map<std::int64_t, std::int64_t> profile;
    for (const Word& w : deletion_sphere(c, n - m)) ++profile[distinct_symbols(w)];
    return profile;
}

}  // namespace dq
