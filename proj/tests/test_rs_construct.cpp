#include <gtest/gtest.h>

#include "dq/code.hpp"
#include "dq/rs_construct.hpp"
#include "oracles.hpp"

using namespace dq;

namespace {

std::int64_t hamming(const Word& a, const Word& b) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

// Codewords with a repeated length-lambda window, counted with the exhaustive
// window comparison (no sets).
std::int64_t repeating_oracle(const std::vector<Word>& code, std::size_t lambda) {
    std::int64_t count = 0;
    for (const Word& w : code) {
        bool rep = false;
        for (std::size_t a = 0; a + lambda <= w.size() && !rep; ++a)
            for (std::size_t b = a + 1; b + lambda <= w.size() && !rep; ++b)
                rep = std::equal(w.begin() + a, w.begin() + a + lambda, w.begin() + b);
        count += rep;
    }
    return count;
}

}  // namespace

TEST(RsSpec, Validation) {
    try {
        RSSpec::make(6, 4, 2);
        FAIL() << "expected UnsupportedError";
    } catch (const UnsupportedError& e) {
        EXPECT_NE(std::string(e.what()).find("q must be prime"), std::string::npos);
    }
    EXPECT_THROW(RSSpec::make(5, 6, 2), std::domain_error);
    EXPECT_THROW(RSSpec::make(5, 4, 5), std::domain_error);
    EXPECT_THROW(RSSpec::make(5, 3, 2, {0, 1, 1}), std::domain_error);
    EXPECT_THROW(RSSpec::make(5, 3, 2, {0, 1, 5}), std::domain_error);
    EXPECT_EQ(RSSpec::make(5, 3, 2).alpha_string(), "0,1,2");
}

TEST(RsGenerate, Examples) {
    const auto constants = rs_generate(RSSpec::make(5, 4, 1, {0, 1, 2, 3}));
    ASSERT_EQ(constants.size(), 5u);
    for (const Word& w : constants) EXPECT_EQ(distinct_symbols(w), 1);

    const auto code = rs_generate(RSSpec::make(3, 3, 2));
    ASSERT_EQ(code.size(), 9u);
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = a + 1; b < code.size(); ++b) EXPECT_GE(hamming(code[a], code[b]), 2);

    for (std::int64_t k = 1; k <= 4; ++k) EXPECT_EQ(rs_generate(RSSpec::make(7, 5, k)).size(), oracle::power(7, k));
    EXPECT_EQ(rs_eval({1, 2, 3}, 2, 7), (1 + 4 + 12) % 7);
}

TEST(RsGenerate, InterpolationProperty) {
    const RSSpec spec = RSSpec::make(5, 4, 2);
    const auto code = rs_generate(spec);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (Symbol a = 0; a < 5; ++a)
                for (Symbol b = 0; b < 5; ++b) {
                    int hits = 0;
                    for (const Word& w : code) hits += (w[i] == a && w[j] == b);
                    EXPECT_EQ(hits, 1);
                    const auto f = lagrange_interpolate({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)},
                                                        {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)}, 5);
                    const Word w = rs_encode(spec, f);
                    EXPECT_EQ(w[i], a);
                    EXPECT_EQ(w[j], b);
                }
}

TEST(LambdaRepeating, Examples) {
    const RSSpec s5 = RSSpec::make(5, 5, 3);
    const auto c5 = count_lambda_repeating(s5, 1);
    EXPECT_EQ(c5, repeating_oracle(rs_generate(s5), 1));
    EXPECT_LE(Integer(c5), binomial(5, 2) * 25);
    EXPECT_EQ(count_lambda_repeating(s5, 5), 0);
    const RSSpec s7 = RSSpec::make(7, 5, 3);
    const auto c7 = count_lambda_repeating(s7, 1);
    EXPECT_EQ(c7, repeating_oracle(rs_generate(s7), 1));
    EXPECT_LE(Integer(c7), binomial(5, 2) * 49);
}

TEST(LambdaRepeating, CountBoundOnSmallGrid) {
    for (std::int64_t q : {5, 7})
        for (std::int64_t n = 3; n <= q; ++n)
            for (std::int64_t k = 3; k <= std::min<std::int64_t>(4, n); ++k)
                for (std::int64_t lambda = 1; 2 * lambda <= k - 1; ++lambda) {
                    const RSSpec spec = RSSpec::make(q, n, k);
                    const auto c = count_lambda_repeating(spec, lambda);
                    EXPECT_EQ(c, repeating_oracle(rs_generate(spec), static_cast<std::size_t>(lambda)));
                    EXPECT_LE(Integer(c), binomial(n, 2) * ipow(q, k - lambda)) << q << " " << n << " " << k;
                }
}

TEST(GammaDegree, Examples) {
    EXPECT_EQ(gamma_degree_bound(4, 6), 36);
    EXPECT_EQ(gamma_degree_bound(5, 4), 25);
    EXPECT_THROW(gamma_degree_bound(4, 8), std::domain_error);

    const RSSpec spec = RSSpec::make(5, 4, 2);
    const auto words = rs_generate(spec);
    std::int64_t brute = 0;
    for (const Word& a : words) {
        std::int64_t deg = 0;
        for (const Word& b : words)
            if (a != b && oracle::edit_distance_exhaustive(a.symbols(), b.symbols()) <= 4) ++deg;
        brute = std::max(brute, deg);
    }
    EXPECT_EQ(rs_conflict_max_degree(spec, 6), brute);
    EXPECT_LT(Integer(brute), 36);
}

TEST(GammaDegree, BruteForceBelowBound) {
    for (std::int64_t q : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
        for (std::int64_t n = 3; n <= std::min<std::int64_t>(q, 13); ++n)
            for (std::int64_t d = 4; d <= 2 * n - 2; d += 2) {
                const std::int64_t k = n - d / 2 + 1;
                if (ipow(q, k) > 1024) continue;
                const auto deg = rs_conflict_max_degree(RSSpec::make(q, n, k), d);
                EXPECT_LT(Integer(deg), gamma_degree_bound(n, d)) << q << " " << n << " " << d;
            }
}

TEST(NeighborhoodEdges, ValueAndGuard) {
    const BoundValue b = neighborhood_edge_bound(90, 6);
    EXPECT_EQ(b.kind, BoundKind::Estimate);
    EXPECT_TRUE(b.applicable);
    using boost::multiprecision::exp;
    using boost::multiprecision::pow;
    const Real expected = Real(ipow(2, 20)) * 6 * pow(Real(90) * exp(Real(1)) / 4, 6);
    EXPECT_LT(abs(*b.approx / expected - 1), Real("1e-40"));
    const BoundValue g = neighborhood_edge_bound(10, 6);
    EXPECT_FALSE(g.applicable);
    EXPECT_TRUE(g.report_only);
    for (std::int64_t n = 10; n < 100; ++n) EXPECT_LT(*neighborhood_edge_bound(n, 6).approx, *neighborhood_edge_bound(n + 1, 6).approx);
}

TEST(ConstructRs, Examples) {
    const Code a = construct_insdel_code_rs(RSSpec::make(5, 4, 2), 6, 1);
    EXPECT_GE(a.words.size(), 1u);
    EXPECT_TRUE(verify_code_distance(a, 6).ok);
    EXPECT_EQ(a.verified_min_distance, 6);

    const Code b = construct_insdel_code_rs(RSSpec::make(7, 5, 4), 4, 1);
    EXPECT_TRUE(verify_code_distance(b, 4).ok);
    const Code c = construct_insdel_code_rs(RSSpec::make(7, 5, 4), 4, 1, RsOrder::MinDegree);
    EXPECT_TRUE(verify_code_distance(c, 4).ok);
    std::cout << "RS (7,5,4) lambda=1 sizes: generation " << b.words.size() << ", min-degree " << c.words.size() << "\n";

    EXPECT_THROW(construct_insdel_code_rs(RSSpec::make(5, 4, 3), 6, 1), std::invalid_argument);
    // Deterministic: same input, same code.
    EXPECT_EQ(construct_insdel_code_rs(RSSpec::make(5, 4, 2), 6, 1).words, a.words);
}

TEST(ConstructRs, AlwaysVerifies) {
    for (std::int64_t q : {3, 5, 7})
        for (std::int64_t n = 3; n <= q; ++n)
            for (std::int64_t d = 4; d <= 2 * n - 2; d += 2) {
                const std::int64_t k = n - d / 2 + 1;
                if (ipow(q, k) > 2401) continue;
                for (std::int64_t lambda = 1; lambda <= 3 && lambda <= n; ++lambda) {
                    const Code c = construct_insdel_code_rs(RSSpec::make(q, n, k), d, lambda);
                    EXPECT_TRUE(verify_code_distance(c, d).ok) << q << " " << n << " " << d;
                }
            }
}
