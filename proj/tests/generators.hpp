#pragma once

// Random inputs for the operation-sequence property tests.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "dq/words.hpp"

namespace gen {

/// A uniformly random lambda-nonrepeating word, by rejection; nullopt if none
/// turned up within `attempts` draws.
inline std::optional<dq::Word> nonrepeating_word(std::size_t n, std::uint32_t q, std::int64_t lambda, std::mt19937_64& rng,
                                                 int attempts = 2000) {
    std::uniform_int_distribution<dq::Symbol> sym(0, q - 1);
    for (int a = 0; a < attempts; ++a) {
        std::vector<dq::Symbol> s(n);
        for (auto& x : s) x = sym(rng);
        dq::Word w(std::move(s), q);
        if (dq::is_lambda_nonrepeating(w, lambda)) return w;
    }
    return std::nullopt;
}

/// A random admissible operation sequence with `pairs` insertions and `pairs`
/// deletions, so the result keeps the length n.
inline dq::OpSequence balanced_ops(std::size_t n, std::uint32_t q, std::int64_t pairs, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> pos(0, static_cast<std::int64_t>(n));
    std::uniform_int_distribution<dq::Symbol> sym(0, q - 1);
    for (;;) {
        std::vector<std::int64_t> positions(static_cast<std::size_t>(2 * pairs));
        for (auto& p : positions) p = pos(rng);
        std::sort(positions.rbegin(), positions.rend());
        std::vector<bool> is_delete(positions.size(), false);
        std::fill(is_delete.begin(), is_delete.begin() + pairs, true);
        std::shuffle(is_delete.begin(), is_delete.end(), rng);
        std::vector<dq::Op> ops;
        for (std::size_t i = 0; i < positions.size(); ++i)
            ops.push_back(is_delete[i] ? dq::Op::del(positions[i]) : dq::Op::ins(positions[i], sym(rng)));
        dq::OpSequence seq(std::move(ops));
        try {
            seq.validate(n, q);
            return seq;
        } catch (const std::domain_error&) {
            continue;
        }
    }
}

}  // namespace gen
