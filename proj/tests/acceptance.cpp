// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.
//
//   dq_acceptance [--seed N] [--budget SECONDS] [--only K]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dq/dq.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    int reported = 0;

    // Records a failure; only the first few are printed in full.
    void fail(const std::string& what) {
        pass = false;
        if (reported++ < 8) std::cout << "    counterexample: " << what << "\n";
    }
};

struct Options {
    std::uint64_t seed = 20240601;
    double budget = 45.0;
    int only = 0;
};

oracle::Seq seq_of(const Word& w) { return {w.begin(), w.end()}; }

Word word_of(const oracle::Seq& s, std::uint32_t q) { return Word(std::vector<Symbol>(s.begin(), s.end()), q); }

// ---------------------------------------------------------------------------

Outcome base_cases(const Options&) {
    Outcome o;
    int points = 0;
    for (std::int64_t q = 2; q <= 256; ++q)
        for (std::int64_t n = 2; ipow(q, n) <= 256; ++n) {
            const Integer qn = ipow(q, n);
            const ExactResult low = exact_D(Params::make(n, q, 2));
            if (!low.complete || Integer(low.value) != qn) o.fail("D_" + std::to_string(q) + "(" + std::to_string(n) + ",2) = " + std::to_string(low.value));
            const ExactResult high = exact_D(Params::make(n, q, 2 * n));
            if (!high.complete || high.value != q) o.fail("D_" + std::to_string(q) + "(" + std::to_string(n) + ",2n) = " + std::to_string(high.value));
            ++points;
        }
    o.detail = std::to_string(points) + " (n,q) pairs";
    return o;
}

Outcome sandwich(const Options& opt) {
    Outcome o;
    int complete = 0, incomplete = 0, comparisons = 0;
    std::vector<std::string> open;
    for (std::int64_t q = 2; q <= 4096; ++q)
        for (std::int64_t n = 2; ipow(q, n) <= 4096; ++n)
            for (std::int64_t d = 2; d <= 2 * n; d += 2) {
                const Params p = Params::make(n, q, d);
                SolveLimits limits;
                limits.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(opt.budget * 1000));
                const ExactResult r = exact_D(p, limits);
                if (!verify_code_distance(r.witness, d).ok || static_cast<std::int64_t>(r.witness.size()) != r.value)
                    o.fail(p.str() + ": witness does not verify");
                const Integer value(r.value);
                for (const BoundValue& b : evaluate_bounds(p).bounds) {
                    if (b.bounds_above()) {
                        ++comparisons;
                        if (value > *b.integer_value) o.fail(p.str() + ": " + b.name + " = " + b.integer_value->str() + " < D >= " + value.str());
                    }
                    if (b.bounds_below() && r.complete) {
                        ++comparisons;
                        if (*b.integer_value > value) o.fail(p.str() + ": " + b.name + " = " + b.integer_value->str() + " > D = " + value.str());
                    }
                }
                if (r.complete) {
                    ++complete;
                } else {
                    ++incomplete;
                    const Integer ub = *best_upper(p).integer_value;
                    // A code meeting the best upper bound pins D only if that bound is right, which is what is under test.
                    open.push_back(p.str() + " D >= " + value.str() + " (best upper " + ub.str() + (ub == value ? ", met by the witness" : "") + ")");
                }
            }
    for (const auto& s : open) std::cout << "    not proven optimal within budget: " << s << "\n";
    if (incomplete > 0) o.pass = false;
    std::ostringstream os;
    os << complete << " points exact, " << incomplete << " unresolved at " << opt.budget << " s/point, " << comparisons
       << " bound comparisons";
    o.detail = os.str();
    return o;
}

Outcome weak_duality(const Options&) {
    Outcome o;
    int checked = 0;
    for (std::int64_t n = 3; n <= 9; ++n)
        for (std::int64_t q = 2; q <= 12; ++q)
            for (std::int64_t s = 1; s <= n - 2; ++s) {
                const LinearProgram lp = build_lp(n, q, s);
                const Rational M = solve_lp_exact(lp);
                const DualCheck check = verify_dual_feasible(lp, dual_certificate(n, q, s));
                const std::string at = "n=" + std::to_string(n) + " q=" + std::to_string(q) + " s=" + std::to_string(s);
                if (!check.feasible) o.fail(at + ": " + check.violation);
                if (check.objective < M) o.fail(at + ": dual objective " + to_string(check.objective) + " < M = " + to_string(M));
                if (s == 1 && ceil_of(check.objective) != ceil_of(thm25_eq7_value(n, q)))
                    o.fail(at + ": ceil of dual objective differs from the d = 2n-2 closed form");
                ++checked;
            }
    o.detail = std::to_string(checked) + " LPs";
    return o;
}

Outcome lp_spot(const Options&) {
    Outcome o;
    const Rational M = solve_lp_exact(build_lp(4, 4, 1));
    const Rational eq7 = thm25_eq7_value(4, 4);
    const Integer bours = bours_value(4, 4);
    if (M != 6) o.fail("M = " + to_string(M));
    if (eq7 != Rational(4) + Rational(24, 12)) o.fail("closed form = " + to_string(eq7));
    if (bours != 6) o.fail("bours = " + bours.str());
    o.detail = "M = " + to_string(M) + ", closed form = " + to_string(eq7) + ", bours = " + bours.str();
    return o;
}

Outcome partition_identity(const Options&) {
    Outcome o;
    int checked = 0;
    for (std::int64_t m = 2; m <= 8; ++m)
        for (std::int64_t q = 2; q <= 7; ++q) {
            Integer total = 0, via_b = 0;
            for (std::int64_t j = 1; j <= m; ++j) {
                total += binomial(q, j) * surjection_count(m, j);
                via_b += lp_b(q, j, m - 1);
            }
            const Integer expect(oracle::power(q, m));
            if (total != expect || via_b != expect)
                o.fail("s+1=" + std::to_string(m) + " q=" + std::to_string(q) + ": " + total.str() + " / " + via_b.str());
            ++checked;
        }
    o.detail = std::to_string(checked) + " (s, q) pairs";
    return o;
}

Outcome sphere_formulas(const Options&) {
    Outcome o;
    int checked = 0;
    for (std::uint32_t q = 2; q <= 3; ++q)
        for (std::size_t n = 1; n <= 6; ++n)
            for (const oracle::Seq& s : oracle::words(n, q)) {
                const Word u = word_of(s, q);
                const std::int64_t rho = runs(u);
                for (std::int64_t t = 1; t <= 2; ++t) {
                    if (static_cast<std::size_t>(t) <= n) {
                        const Integer size(oracle::deletions(s, t).size());
                        if (size < deletion_sphere_lower(rho, t) || size > deletion_sphere_upper(rho, t))
                            o.fail("deletion sphere of " + u.str() + " t=" + std::to_string(t) + " has size " + size.str());
                        if (Integer(deletion_sphere(u, t).size()) != size) o.fail("deletion_sphere(" + u.str() + ") size mismatch");
                    }
                    const Integer ins(oracle::supersequences(s, t, q).size());
                    if (insertion_sphere_size(static_cast<std::int64_t>(n), t, q) != ins)
                        o.fail("insertion sphere n=" + std::to_string(n) + " t=" + std::to_string(t) + " q=" + std::to_string(q));
                    if (Integer(insertion_sphere(u, t).size()) != ins) o.fail("insertion_sphere(" + u.str() + ") size mismatch");
                    ++checked;
                }
            }
    o.detail = std::to_string(checked) + " (word, t) cases";
    return o;
}

Outcome hypergraph_formulas(const Options&) {
    Outcome o;
    int checked = 0;
    for (std::int64_t n = 2; n <= 6; ++n)
        for (std::int64_t q = 2; q <= 3; ++q)
            for (std::int64_t t = 1; t <= std::min<std::int64_t>(2, n - 1); ++t) {
                const HypergraphSpec h{n, q, t};
                const auto nn = static_cast<std::size_t>(n), tt = static_cast<std::size_t>(t);
                const auto qq = static_cast<std::uint32_t>(q);
                const std::string at = "n=" + std::to_string(n) + " q=" + std::to_string(q) + " t=" + std::to_string(t);
                if (hypergraph_degree(h) != oracle::hypergraph_degree(nn, qq, tt)) o.fail(at + ": degree");
                if (ipow(q, n - t) >= 2 && hypergraph_codegree(h) != oracle::hypergraph_codegree(nn, qq, tt)) o.fail(at + ": codegree");
                ++checked;
            }
    o.detail = std::to_string(checked) + " (n, q, t) triples";
    return o;
}

Outcome comparison(const Options&) {
    Outcome o;
    int checked = 0;
    auto check = [&](std::int64_t n, std::int64_t q, std::int64_t d) {
        const Params p = Params::make(n, q, d);
        const BoundValue thm = thm25_upper(p);
        if (!thm.applicable || !(*thm.value < levenshtein_envelope(p)))
            o.fail(p.str() + ": " + thm.value_string() + " vs envelope " + to_string(levenshtein_envelope(p)));
        if (d == 2 * n - 2 && !(thm25_eq7_value(n, q) < Rational(q * q, 4) + q)) o.fail(p.str() + ": displayed q^2/4 + q comparison");
        ++checked;
    };
    for (std::int64_t n = 4; n <= 10; ++n)
        for (std::int64_t q = 2; q <= 16; ++q) check(n, q, 2 * n - 2);
    for (std::int64_t n = 6; n <= 10; ++n)
        for (std::int64_t q = 3; q <= 16; ++q) check(n, q, 2 * n - 4);
    o.detail = std::to_string(checked) + " points";
    return o;
}

Outcome constructions(const Options&) {
    Outcome o;
    int greedy = 0, rs = 0;
    const Code small = greedy_matching_code({3, 2, 1});
    if (small.size() != 2) o.fail("greedy (n=3,q=2,t=1) has size " + std::to_string(small.size()));
    for (std::int64_t q = 2; q <= 1024; ++q)
        for (std::int64_t n = 2; ipow(q, n) <= 1024; ++n)
            for (std::int64_t d = 4; d <= 2 * n; d += 2) {
                const Params p = Params::make(n, q, d);
                const Code c = greedy_matching_code({n, q, p.t()});
                if (!verify_code_distance(c, d).ok) o.fail(p.str() + ": greedy code fails verification");
                if (d == 4) {
                    const BoundValue gv = gv_lower(p);
                    if (gv.applicable && Integer(c.size()) < *gv.integer_value)
                        o.fail(p.str() + ": greedy size " + std::to_string(c.size()) + " < ceil gv " + gv.integer_value->str());
                }
                ++greedy;
            }
    for (std::int64_t q : {2, 3, 5, 7, 11})
        for (std::int64_t n = 2; n <= std::min<std::int64_t>(q, 8); ++n)
            for (std::int64_t d = 4; d <= 2 * n; d += 2) {
                const std::int64_t k = n - d / 2 + 1;
                if (ipow(q, k) > 20000) continue;
                for (std::int64_t lambda = 1; lambda <= std::min<std::int64_t>(3, n); ++lambda)
                    for (RsOrder order : {RsOrder::Generation, RsOrder::MinDegree}) {
                        if (order == RsOrder::MinDegree && ipow(q, k) > 2000) continue;
                        const Code c = construct_insdel_code_rs(RSSpec::make(q, n, k), d, lambda, order);
                        if (!verify_code_distance(c, d).ok) o.fail(c.provenance + " d=" + std::to_string(d) + " fails verification");
                        ++rs;
                    }
            }
    o.detail = std::to_string(greedy) + " greedy codes, " + std::to_string(rs) + " RS codes verified";
    return o;
}

// Isolation is checked for even d: k isolated positions give d_E >= d for
// every even d <= k + 1.
Outcome isolated_ops(const Options& opt) {
    Outcome o;
    std::mt19937_64 rng(opt.seed);
    const std::int64_t lambda = 3;
    int trials = 0, with_isolated = 0;
    while (trials < 10000) {
        const std::size_t n = 4 + rng() % 9;
        const std::uint32_t q = 2 + static_cast<std::uint32_t>(rng() % 3);
        const auto u = gen::nonrepeating_word(n, q, lambda, rng, 200);
        if (!u) continue;
        const OpSequence ops = gen::balanced_ops(n, q, 1 + static_cast<std::int64_t>(rng() % 3), rng);
        const Word v = apply_ops(*u, ops);
        if (!is_lambda_nonrepeating(v, lambda)) continue;
        const auto pos = ops.positions();
        const std::int64_t k = count_lambda_isolated(std::span<const std::int64_t>(pos), static_cast<std::int64_t>(n), lambda);
        const std::int64_t d = 2 * ((k + 1) / 2);
        const std::int64_t dist = edit_distance(*u, v);
        if (dist != oracle::edit_distance_exhaustive(seq_of(*u), seq_of(v))) o.fail("edit distance disagrees with exhaustive LCS");
        if (dist < d) o.fail(u->str() + " -> " + v.str() + ": k=" + std::to_string(k) + " but d_E=" + std::to_string(dist));
        if (k >= 1) ++with_isolated;
        ++trials;
    }
    o.detail = std::to_string(trials) + " trials (" + std::to_string(with_isolated) + " with an isolated position), seed " +
               std::to_string(opt.seed);
    return o;
}

Outcome repeating_count(const Options&) {
    Outcome o;
    int checked = 0;
    for (std::int64_t q : {2, 3, 5, 7, 11, 13})
        for (std::int64_t k = 3; k <= 5; ++k)
            for (std::int64_t n = k; n <= q; ++n)
                for (std::int64_t lambda = 1; lambda <= (k - 1) / 2; ++lambda) {
                    const RSSpec spec = RSSpec::make(q, n, k);
                    const Integer count(count_lambda_repeating(spec, lambda));
                    const Integer bound = binomial(n, 2) * ipow(q, k - lambda);
                    if (count > bound)
                        o.fail("q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" + std::to_string(k) + " lambda=" +
                               std::to_string(lambda) + ": " + count.str() + " > " + bound.str());
                    ++checked;
                }
    o.detail = std::to_string(checked) + " (q, n, k, lambda) cases";
    return o;
}

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(DQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) throw std::runtime_error("dq " + args + " failed");
    return out;
}

Outcome estimates_excluded(const Options&) {
    Outcome o;
    int checked = 0;
    auto kinds = [&](const Params& p) {
        for (const BoundValue& b : {refined_gv_estimate(p), matching_main_term(p), refined_gv_log_branch(p)})
            if (b.kind != BoundKind::Estimate || b.bounds_above() || b.bounds_below()) o.fail(p.str() + ": " + b.name + " is not an Estimate");
    };
    // Past the log-branch threshold only the estimates themselves are cheap to evaluate.
    kinds(Params::make(13200, 16384, 6));
    const std::vector<std::array<std::int64_t, 3>> points{{6, 16, 6}, {20, 16, 6}, {8, 5, 4}, {5, 3, 6}, {12, 7, 8}};
    for (const auto& [n, q, d] : points) {
        const Params p = Params::make(n, q, d);
        const std::string at = p.str();
        kinds(p);
        const BoundReport r = evaluate_bounds(p);
        for (const std::string& name : {r.best_upper.detail, r.best_lower.detail})
            if (name.find("refined_gv") != std::string::npos || name.find("matching_main_term") != std::string::npos)
                o.fail(at + ": an estimate feeds a best bound");

        const std::string args = "bounds --n " + std::to_string(n) + " --q " + std::to_string(q) + " --d " + std::to_string(d) + " --format json";
        const json all = json::parse(run_cli(args));
        const json certified = json::parse(run_cli(args + " --certified-only"));
        auto names = [](const json& j) {
            std::vector<std::string> out;
            for (const auto& b : j.at("bounds")) out.push_back(b.at("name"));
            for (const auto& b : j.at("diagnostics")) out.push_back(b.at("name"));
            return out;
        };
        const auto full = names(all), cert = names(certified);
        for (const char* est : {"refined_gv", "matching_main_term"}) {
            if (std::find(full.begin(), full.end(), est) == full.end()) o.fail(at + ": " + est + " missing from the full report");
            if (std::find(cert.begin(), cert.end(), est) != cert.end()) o.fail(at + ": " + est + " survives --certified-only");
        }
        for (const auto& b : certified.at("bounds"))
            if (b.at("kind") == "Estimate") o.fail(at + ": --certified-only kept " + b.at("name").get<std::string>());
        ++checked;
    }
    o.detail = std::to_string(checked) + " points, library and CLI";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"acceptance criteria"};
    app.add_option("--seed", opt.seed, "seed for the randomized trials");
    app.add_option("--budget", opt.budget, "seconds per exact solve in the sandwich suite");
    app.add_option("--only", opt.only, "run a single criterion")->check(CLI::Range(1, 12));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome(const Options&)>>> criteria{
        {"base cases D(n,2) = q^n, D(n,2n) = q", base_cases},
        {"lower <= exact <= upper sandwich, q^n <= 4096", sandwich},
        {"weak duality of the closed-form dual point", weak_duality},
        {"LP optimum at (4,4,1) = 6", lp_spot},
        {"b_j partition identity", partition_identity},
        {"deletion and insertion sphere formulas", sphere_formulas},
        {"hypergraph degree and codegree", hypergraph_formulas},
        {"dual bound below the Levenshtein envelope", comparison},
        {"constructed codes verify", constructions},
        {"isolated operations force distance", isolated_ops},
        {"lambda-repeating RS codewords", repeating_count},
        {"estimates excluded from certified output", estimates_excluded},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int k = static_cast<int>(i + 1);
        if (opt.only && opt.only != k) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second(opt);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " #" << k << " " << criteria[i].first << ": " << o.detail << " ("
                  << std::fixed << std::setprecision(1) << secs << " s)" << std::endl;
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
