#pragma once

// Exact D_q(n,d) for small q^n: maximum independent set in the conflict graph
// on [q]^n (edges join words at edit distance < d). Branch and bound with
// bitsets; the bound at each node is a greedy cover of the candidates by
// cliques of the conflict graph, since an independent set meets each clique
// at most once.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dq/bound_value.hpp"
#include "dq/code.hpp"
#include "dq/distance_table.hpp"
#include "dq/words.hpp"

namespace dq {

struct SolveLimits {
    std::uint64_t vertex_cap = 4096;
    /// Zero means no limit.
    std::chrono::milliseconds time_budget{0};
    bool allow_incomplete = true;
    /// Perturbation rounds of the local search that seeds the incumbent.
    std::uint64_t local_search_iterations = 4000;
};

struct ExactResult {
    Params params;
    /// Exact value when complete, otherwise the size of the best code found.
    std::int64_t value = 0;
    bool complete = false;
    Code witness;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

namespace detail {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : w_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    /// Index of the lowest set bit, or npos.
    std::size_t first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w_[k]));
        return npos;
    }
    void and_with(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    }
    void and_not(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    }
    std::vector<std::uint64_t>& words() { return w_; }
    const std::vector<std::uint64_t>& words() const { return w_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::uint64_t> w_;
};

class MisSolver {
public:
    // adj[v] contains v itself and every vertex in conflict with it.
    MisSolver(const std::vector<Bitset>& adj, std::chrono::steady_clock::time_point deadline, bool has_deadline)
        : n_(adj.size()), w_((adj.size() + 63) / 64), adj_(n_ * w_), deadline_(deadline), has_deadline_(has_deadline) {
        for (std::size_t v = 0; v < n_; ++v) std::copy(adj[v].words().begin(), adj[v].words().end(), adj_.begin() + v * w_);
    }

    void seed(std::vector<std::size_t> solution) {
        if (solution.size() > best_.size()) best_ = std::move(solution);
    }

    /// Returns true when the search finished (best() is optimal).
    bool run() {
        levels_.assign(1, Level{});
        levels_[0].P.assign(w_, 0);
        for (std::size_t v = 0; v < n_; ++v) levels_[0].P[v >> 6] |= std::uint64_t{1} << (v & 63);
        current_.clear();
        expand(0);
        return !aborted_;
    }

    const std::vector<std::size_t>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    struct Level {
        std::vector<std::uint64_t> P;
        std::vector<std::uint32_t> order;
        std::vector<std::uint32_t> colour;
    };

    const std::uint64_t* row(std::size_t v) const { return adj_.data() + v * w_; }
    std::uint64_t* cls(std::size_t k) { return classes_.data() + k * w_; }

    void expand(std::size_t depth) {
        if (aborted_) return;
        ++nodes_;
        if ((nodes_ & 1023) == 0 && has_deadline_ && std::chrono::steady_clock::now() > deadline_) {
            aborted_ = true;
            return;
        }
        if (levels_.size() <= depth + 1) {
            levels_.resize(depth + 2);
            levels_[depth + 1].P.assign(w_, 0);
        }
        Level& L = levels_[depth];
        colour_cover(L);
        std::vector<std::uint64_t>& P = L.P;
        for (std::size_t idx = L.order.size(); idx-- > 0;) {
            if (current_.size() + L.colour[idx] <= best_.size()) return;
            const std::size_t v = L.order[idx];
            current_.push_back(v);
            std::vector<std::uint64_t>& next = levels_[depth + 1].P;
            const std::uint64_t* a = row(v);
            bool empty = true;
            for (std::size_t k = 0; k < w_; ++k) {
                next[k] = P[k] & ~a[k];
                empty = empty && next[k] == 0;
            }
            if (empty) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(depth + 1);
            }
            current_.pop_back();
            if (aborted_) return;
            P[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
    }

    // Greedy clique cover of P. Only vertices whose class number can still beat
    // the incumbent are recorded for branching; a vertex landing in such a class
    // is first offered to an earlier class by moving a single blocking vertex.
    void colour_cover(Level& L) {
        const std::size_t kmin = best_.size() + 1 > current_.size() ? best_.size() + 1 - current_.size() : 1;
        if (classes_.size() < (kmin + 1) * w_) classes_.resize((kmin + 1) * w_);
        L.order.clear();
        L.colour.clear();
        U_.assign(L.P.begin(), L.P.end());
        Q_.resize(w_);
        std::size_t k = 0;
        for (;;) {
            bool any = false;
            for (std::size_t i = 0; i < w_; ++i) any = any || U_[i] != 0;
            if (!any) break;
            ++k;
            std::copy(U_.begin(), U_.end(), Q_.begin());
            if (k < kmin) std::fill(cls(k), cls(k) + w_, 0);
            for (std::size_t i = 0; i < w_; ++i) {
                while (Q_[i]) {
                    const std::size_t v = (i << 6) + static_cast<std::size_t>(std::countr_zero(Q_[i]));
                    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
                    U_[i] &= ~bit;
                    const std::uint64_t* a = row(v);
                    for (std::size_t j = i; j < w_; ++j) Q_[j] &= a[j];
                    Q_[i] &= ~bit;
                    if (k < kmin) {
                        cls(k)[i] |= bit;
                    } else if (!(kmin > 2 && renumber(v, kmin))) {
                        L.order.push_back(static_cast<std::uint32_t>(v));
                        L.colour.push_back(static_cast<std::uint32_t>(k));
                    }
                }
            }
        }
    }

    // Number of members of class c not in conflict with v, capped at 2; `which`
    // receives the member when there is exactly one.
    std::size_t compatible(std::size_t c, std::size_t v, std::size_t& which) {
        const std::uint64_t* cw = cls(c);
        const std::uint64_t* a = row(v);
        std::size_t found = 0;
        for (std::size_t k = 0; k < w_; ++k) {
            std::uint64_t x = cw[k] & ~a[k];
            while (x) {
                if (++found > 1) return 2;
                which = (k << 6) + static_cast<std::size_t>(std::countr_zero(x));
                x &= x - 1;
            }
        }
        return found;
    }

    bool renumber(std::size_t v, std::size_t kmin) {
        std::size_t w = 0;
        for (std::size_t k1 = 1; k1 < kmin; ++k1) {
            if (compatible(k1, v, w) != 1) continue;
            for (std::size_t k2 = k1 + 1; k2 < kmin; ++k2) {
                std::size_t unused = 0;
                if (compatible(k2, w, unused) != 0) continue;
                cls(k1)[w >> 6] &= ~(std::uint64_t{1} << (w & 63));
                cls(k1)[v >> 6] |= std::uint64_t{1} << (v & 63);
                cls(k2)[w >> 6] |= std::uint64_t{1} << (w & 63);
                return true;
            }
        }
        return false;
    }

    std::size_t n_;
    std::size_t w_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> classes_;
    std::vector<std::uint64_t> U_, Q_;
    std::deque<Level> levels_;  // stable references while deeper levels are added
    std::vector<std::size_t> current_;
    std::chrono::steady_clock::time_point deadline_;
    bool has_deadline_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

inline std::vector<std::size_t> greedy_independent(const std::vector<Bitset>& adj, const std::vector<std::size_t>& order) {
    Bitset blocked(adj.size());
    std::vector<std::size_t> picked;
    for (std::size_t v : order) {
        if (blocked.test(v)) continue;
        picked.push_back(v);
        auto& bw = blocked.words();
        const auto& aw = adj[v].words();
        for (std::size_t k = 0; k < bw.size(); ++k) bw[k] |= aw[k];
    }
    return picked;
}

/// Iterated local search with (1,2)-swaps: remove one solution vertex and
/// insert two of its neighbours that are blocked by it alone. Deterministic for
/// a given seed and iteration count.
inline std::vector<std::size_t> local_search_independent(const std::vector<Bitset>& adj, std::vector<std::size_t> start,
                                                         std::uint64_t iterations, std::uint64_t seed) {
    const std::size_t N = adj.size();
    std::vector<std::vector<std::size_t>> nbr(N);
    for (std::size_t v = 0; v < N; ++v)
        for (std::size_t u = 0; u < N; ++u)
            if (u != v && adj[v].test(u)) nbr[v].push_back(u);

    std::vector<char> in(N, 0);
    std::vector<std::size_t> tight(N, 0);
    std::size_t size = 0;
    auto insert = [&](std::size_t v) {
        in[v] = 1;
        ++size;
        for (auto u : nbr[v]) ++tight[u];
    };
    auto remove = [&](std::size_t v) {
        in[v] = 0;
        --size;
        for (auto u : nbr[v]) --tight[u];
    };
    for (auto v : start) insert(v);

    std::mt19937_64 rng(seed);
    auto improve = [&]() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = 0; v < N; ++v)
                if (!in[v] && tight[v] == 0) {
                    insert(v);
                    changed = true;
                }
            for (std::size_t x = 0; x < N && !changed; ++x) {
                if (!in[x]) continue;
                std::vector<std::size_t> cand;
                for (auto u : nbr[x])
                    if (tight[u] == 1) cand.push_back(u);
                for (std::size_t a = 0; a < cand.size() && !changed; ++a)
                    for (std::size_t b = a + 1; b < cand.size(); ++b)
                        if (!adj[cand[a]].test(cand[b])) {
                            remove(x);
                            insert(cand[a]);
                            insert(cand[b]);
                            changed = true;
                            break;
                        }
            }
        }
    };

    improve();
    std::vector<char> best_in = in;
    std::size_t best_size = size;
    for (std::uint64_t it = 0; it < iterations; ++it) {
        // Force a random outside vertex in, evicting its neighbours.
        std::size_t v = static_cast<std::size_t>(rng() % N);
        if (in[v]) continue;
        for (auto u : nbr[v])
            if (in[u]) remove(u);
        insert(v);
        improve();
        if (size > best_size) {
            best_size = size;
            best_in = in;
        } else if (size + 1 < best_size) {
            std::fill(tight.begin(), tight.end(), 0);
            in.assign(N, 0);
            size = 0;
            for (std::size_t u = 0; u < N; ++u)
                if (best_in[u]) insert(u);
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < N; ++v)
        if (best_in[v]) out.push_back(v);
    return out;
}

}  // namespace detail

inline std::map<std::int64_t, std::int64_t> conflict_degree_histogram(const Params& p, std::uint64_t vertex_cap = 4096) {
    const auto table = distance_table(static_cast<std::size_t>(p.n), static_cast<std::uint32_t>(p.q), vertex_cap);
    const std::uint64_t N = table->size();
    std::map<std::int64_t, std::int64_t> hist;
    for (std::uint64_t a = 0; a < N; ++a) {
        std::int64_t deg = 0;
        for (std::uint64_t b = 0; b < N; ++b)
            if (a != b && (*table)(a, b) < p.d) ++deg;
        ++hist[deg];
    }
    return hist;
}

inline ExactResult exact_D(const Params& p, const SolveLimits& limits = {}) {
    const auto start = std::chrono::steady_clock::now();
    const auto n = static_cast<std::size_t>(p.n);
    const auto q = static_cast<std::uint32_t>(p.q);
    word_count(q, n, limits.vertex_cap);  // throws ResourceError above the cap
    const auto table = distance_table(n, q, std::max(limits.vertex_cap, kDistanceTableCap));
    const std::uint64_t N = table->size();

    // Renumber vertices by non-decreasing conflict degree (ties by word index).
    std::vector<std::int64_t> degree(N, 0);
    for (std::uint64_t a = 0; a < N; ++a)
        for (std::uint64_t b = 0; b < N; ++b)
            if (a != b && (*table)(a, b) < p.d) ++degree[a];
    std::vector<std::size_t> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return degree[x] < degree[y]; });

    std::vector<detail::Bitset> adj(N, detail::Bitset(N));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            if ((*table)(perm[a], perm[b]) < p.d) adj[a].set(b);  // includes a == b

    const bool has_deadline = limits.time_budget.count() > 0;
    detail::MisSolver solver(adj, start + limits.time_budget, has_deadline);

    // Initial solutions: degree order, lexicographic order, and a few seeded shuffles.
    std::vector<std::size_t> order(N);
    std::iota(order.begin(), order.end(), 0);
    solver.seed(detail::greedy_independent(adj, order));
    std::vector<std::size_t> inverse(N);
    for (std::size_t a = 0; a < N; ++a) inverse[perm[a]] = a;
    solver.seed(detail::greedy_independent(adj, inverse));
    std::mt19937_64 rng(0x5eed);
    for (int round = 0; round < 16; ++round) {
        std::shuffle(order.begin(), order.end(), rng);
        solver.seed(detail::greedy_independent(adj, order));
    }
    solver.seed(detail::local_search_independent(adj, solver.best(), limits.local_search_iterations, 0x1badd00d));

    const bool complete = solver.run();
    if (!complete && !limits.allow_incomplete)
        throw ResourceError("exact solver exceeded its time budget at " + p.str());

    ExactResult res;
    res.params = p;
    res.complete = complete;
    res.nodes = solver.nodes();
    std::vector<std::uint64_t> ids;
    for (std::size_t v : solver.best()) ids.push_back(perm[v]);
    std::sort(ids.begin(), ids.end());
    res.witness.n = n;
    res.witness.q = q;
    res.witness.provenance = complete ? "exact-solver" : "exact-solver (incomplete)";
    for (auto id : ids) res.witness.words.push_back(word_from_index(id, n, q));
    res.value = static_cast<std::int64_t>(ids.size());
    certify_code(res.witness, p.d);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace dq
