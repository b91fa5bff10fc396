#pragma once

// All-pairs edit distances on [q]^n, computed once per (n, q) with a
// bit-parallel LCS and shared between callers.

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "dq/words.hpp"

namespace dq {

/// LCS of two words of equal alphabet with |x| <= 64 (bit-vector algorithm).
inline std::int64_t lcs_bitparallel(const std::vector<Symbol>& x, const std::vector<Symbol>& y, std::uint32_t q) {
    const std::size_t m = x.size();
    if (m > 64) throw std::domain_error("lcs_bitparallel: word longer than 64");
    if (m == 0) return 0;
    std::vector<std::uint64_t> match(q, 0);
    for (std::size_t i = 0; i < m; ++i) match[x[i]] |= std::uint64_t{1} << i;
    const std::uint64_t mask = m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    std::uint64_t v = mask;
    for (Symbol c : y) {
        const std::uint64_t u = v & match[c];
        v = ((v + u) | (v - u)) & mask;
    }
    return static_cast<std::int64_t>(m) - std::popcount(v);
}

class DistanceTable {
public:
    DistanceTable(std::size_t n, std::uint32_t q, std::uint64_t cap)
        : n_(n), q_(q), size_(word_count(q, n, cap)), dist_(size_ * size_, 0) {
        std::vector<std::vector<Symbol>> words(size_);
        for (std::uint64_t i = 0; i < size_; ++i) words[i] = word_from_index(i, n, q).symbols();
        std::vector<std::uint64_t> match(q);
        const std::uint64_t mask = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        for (std::uint64_t a = 0; a < size_; ++a) {
            std::fill(match.begin(), match.end(), 0);
            for (std::size_t i = 0; i < n; ++i) match[words[a][i]] |= std::uint64_t{1} << i;
            for (std::uint64_t b = a + 1; b < size_; ++b) {
                std::uint64_t v = mask;
                for (Symbol c : words[b]) {
                    const std::uint64_t u = v & match[c];
                    v = ((v + u) | (v - u)) & mask;
                }
                const auto l = static_cast<std::int64_t>(n) - std::popcount(v);
                const auto d = static_cast<std::uint8_t>(2 * (static_cast<std::int64_t>(n) - l));
                dist_[a * size_ + b] = d;
                dist_[b * size_ + a] = d;
            }
        }
    }

    std::size_t length() const { return n_; }
    std::uint32_t alphabet_size() const { return q_; }
    std::uint64_t size() const { return size_; }
    std::uint8_t operator()(std::uint64_t a, std::uint64_t b) const { return dist_[a * size_ + b]; }

private:
    std::size_t n_;
    std::uint32_t q_;
    std::uint64_t size_;
    std::vector<std::uint8_t> dist_;
};

inline constexpr std::uint64_t kDistanceTableCap = 4096;

/// Shared, lazily built table for [q]^n. Thread-safe.
inline std::shared_ptr<const DistanceTable> distance_table(std::size_t n, std::uint32_t q,
                                                           std::uint64_t cap = kDistanceTableCap) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, std::uint32_t>, std::shared_ptr<const DistanceTable>> cache;
    word_count(q, n, cap);  // throws ResourceError before any allocation
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, q}];
    if (!slot) slot = std::make_shared<const DistanceTable>(n, q, cap);
    return slot;
}

}  // namespace dq
