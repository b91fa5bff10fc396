// Command-line front end: bound tables, exact solves, constructions,
// verification and the sphere-packing LP.
//
// Exit codes: 0 success, 2 usage, 3 resource cap, 4 verification failure.

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dq/dq.hpp"

using namespace dq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerify = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Params make_params(std::int64_t n, std::int64_t q, std::int64_t d) {
    try {
        Params p = Params::make(n, q, d);
        if (p.d_normalized)
            std::cerr << "warning: d=" << p.requested_d << " is odd; using d=" << p.d
                      << " (words of equal length are at even edit distance)\n";
        return p;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string value_cell(const BoundValue& b) {
    if (!b.applicable) return b.report_only && b.approx ? "(" + to_string(*b.approx, 8) + ")" : "-";
    if (b.value) return to_string(*b.value);
    return "~" + to_string(*b.approx, 8);
}

std::string rational_cell(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

void print_bound_rows(std::ostream& os, const std::vector<BoundValue>& rows, bool certified_only) {
    os << std::left << std::setw(24) << "name" << std::setw(16) << "kind" << std::setw(26) << "value" << std::setw(10)
       << "integer" << "note\n";
    for (const BoundValue& b : rows) {
        if (certified_only && !is_certified(b.kind)) continue;
        std::string note = b.condition_note;
        if (!b.detail.empty()) note += (note.empty() ? "" : "; ") + b.detail;
        if (!b.applicable) note = "not applicable: " + note;
        os << std::setw(24) << b.name << std::setw(16) << kind_name(b.kind) << std::setw(26) << value_cell(b) << std::setw(10)
           << (b.integer_value ? b.integer_value->str() : "-") << note << "\n";
    }
}

json report_to_json(const BoundReport& r, bool certified_only) {
    json j;
    j["params"] = params_to_json(r.params);
    j["requested_d"] = r.params.requested_d;
    j["bounds"] = json::array();
    for (const auto& b : r.bounds)
        if (!certified_only || is_certified(b.kind)) j["bounds"].push_back(bound_to_json(b));
    j["best_upper"] = bound_to_json(r.best_upper);
    j["best_lower"] = bound_to_json(r.best_lower);
    j["diagnostics"] = json::array();
    if (!certified_only)
        for (const auto& b : r.diagnostics) j["diagnostics"].push_back(bound_to_json(b));
    j["tool_version"] = kToolVersion;
    return j;
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
    std::int64_t n = 0, q = 0, d = 0;
    std::string format = "table";
    bool certified_only = false;
};

int cmd_bounds(const BoundsArgs& a) {
    const Params p = make_params(a.n, a.q, a.d);
    const BoundReport r = evaluate_bounds(p);
    if (a.format == "json") {
        std::cout << report_to_json(r, a.certified_only).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "bounds on D_q(n,d) for " << p.str() << "\n\n";
    print_bound_rows(std::cout, r.bounds, a.certified_only);
    std::cout << "\n";
    print_bound_rows(std::cout, {r.best_upper, r.best_lower}, false);
    if (!a.certified_only && !r.diagnostics.empty()) {
        std::cout << "\ndiagnostics (not bounds on D):\n";
        print_bound_rows(std::cout, r.diagnostics, false);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct ExactArgs {
    std::int64_t n = 0, q = 0, d = 0;
    std::string out;
    double time_budget = 60.0;
    std::uint64_t vertex_cap = 4096;
    bool no_cache = false;
    std::string cache_path;
};

void write_witness(const std::string& path, const Code& code, std::int64_t d) {
    if (path.empty()) return;
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    write_code(os, code, d);
}

void print_exact(const Params& p, std::int64_t value, std::size_t witness_size) {
    std::cout << p.str() << "\n";
    std::cout << "D = " << value << "\n";
    std::cout << "witness: " << witness_size << " words, verified distance >= " << p.d << "\n";
}

int cmd_exact(const ExactArgs& a) {
    const Params p = make_params(a.n, a.q, a.d);
    const Integer vertices = ipow(p.q, p.n);
    if (vertices > Integer(a.vertex_cap)) {
        std::cerr << "refused: q^n = " << vertices.str() << " exceeds the vertex cap " << a.vertex_cap << "\n";
        return kExitResource;
    }
    ResultCache cache(a.cache_path.empty() ? ResultCache::default_path() : a.cache_path);
    if (!a.no_cache) {
        if (auto hit = cache.find(p); hit && !hit->witness.empty()) {
            const Code code = code_from_witness(p, hit->witness);
            if (verify_code_distance(code, p.d).ok && Integer(code.size()) == *hit->exact) {
                print_exact(p, static_cast<std::int64_t>(code.size()), code.size());
                std::cout << "cache hit: " << cache.path() << "\n";
                write_witness(a.out, code, p.d);
                return kExitOk;
            }
            std::cerr << "warning: ignoring cache entry that fails verification\n";
        }
    }

    SolveLimits limits;
    limits.vertex_cap = a.vertex_cap;
    limits.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(a.time_budget * 1000));
    const ExactResult r = exact_D(p, limits);
    std::cerr << "search: " << r.nodes << " nodes, " << std::fixed << std::setprecision(2) << r.seconds << " s\n";
    write_witness(a.out, r.witness, p.d);
    if (!r.complete) {
        std::cout << p.str() << "\n";
        std::cout << "D >= " << r.value << " (time budget exhausted; best code found, optimality not proven)\n";
        return kExitResource;
    }
    print_exact(p, r.value, r.witness.size());
    if (!a.no_cache) {
        ResultRecord rec;
        rec.params = p;
        rec.bounds = evaluate_bounds(p).bounds;
        rec.exact = r.value;
        rec.witness = witness_lines(r.witness);
        rec.created_at = utc_timestamp();
        cache.append(rec);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
    std::int64_t n = 0, q = 0, d = 0;
    std::string method;
    std::int64_t lambda = 3;
    std::string alpha;
    std::string order = "generation";
    std::string out;
};

std::vector<std::int64_t> parse_alpha(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--alpha expects comma-separated integers, got '" + s + "'");
        }
    }
    return out;
}

int cmd_construct(const ConstructArgs& a) {
    const Params p = make_params(a.n, a.q, a.d);
    Code code;
    if (a.method == "greedy-hypergraph") {
        if (p.d < 4 || p.d > 2 * p.n) throw UsageError("greedy-hypergraph needs 4 <= d <= 2n");
        code = greedy_matching_code({p.n, p.q, p.t()});
    } else {
        const RSSpec spec = RSSpec::make(p.q, p.n, p.n - p.d / 2 + 1, parse_alpha(a.alpha));
        code = construct_insdel_code_rs(spec, p.d, a.lambda, a.order == "min-degree" ? RsOrder::MinDegree : RsOrder::Generation);
    }
    const VerifyResult v = verify_code_distance(code, p.d);
    std::cout << p.str() << "\n";
    std::cout << "method: " << a.method << " (" << code.provenance << ")\n";
    std::cout << "size: " << code.size() << "\n";
    std::cout << "verified distance: " << (v.ok ? "ok" : "FAILED") << ", minimum pairwise ";
    if (code.size() < 2) std::cout << "none (fewer than two words)\n";
    else std::cout << v.min_distance << "\n";
    const BoundValue gv = gv_lower(p);
    const BoundValue main = matching_main_term(p);
    std::cout << "compare: size " << code.size() << " vs gv_lower "
              << (gv.applicable ? to_string(*gv.value) + " (ceil " + gv.integer_value->str() + ")" : "n/a") << " vs matching_main_term "
              << (main.applicable ? to_string(*main.value) + " (~" + to_string(*main.approx, 6) + ")" : "n/a") << "\n";
    if (!a.out.empty()) {
        write_witness(a.out, code, p.d);
        std::cout << "wrote " << a.out << "\n";
    }
    return v.ok ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string file;
    std::optional<std::int64_t> d;
};

int cmd_verify(const VerifyArgs& a) {
    std::ifstream in(a.file);
    if (!in) throw UsageError("cannot open " + a.file);
    CodeFile f;
    try {
        f = read_code(in);
    } catch (const CodeParseError& e) {
        throw UsageError(a.file + ": " + e.what());
    }
    const std::optional<std::int64_t> d = a.d ? a.d : f.d;
    if (!d) throw UsageError("no distance given: pass --d or put it in the header line");
    const VerifyResult r = verify_code_distance(f.code, *d);
    std::cout << "words: " << f.code.size() << " n=" << f.code.n << " q=" << f.code.q << "\n";
    if (f.code.size() < 2) std::cout << "min distance: none (fewer than two words)\n";
    else std::cout << "min distance: " << r.min_distance << "\n";
    if (r.ok) {
        std::cout << "ok (d=" << *d << ")\n";
        return kExitOk;
    }
    const auto [x, y] = *r.witness;
    std::cout << "FAIL (d=" << *d << "): words " << x + 1 << " and " << y + 1 << " are at distance " << r.min_distance << "\n";
    std::cout << "  " << f.code.words[x].str() << "\n  " << f.code.words[y].str() << "\n";
    return kExitVerify;
}

// ---------------------------------------------------------------------------

struct TableArgs {
    std::string n, q, d;
    std::string format = "csv";
    bool compare = false;
    unsigned threads = 1;
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& name, const std::string& s) {
    static const std::regex re(R"(\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw UsageError("--" + name + " expects a or a..b, got '" + s + "'");
    const std::int64_t lo = std::stoll(m[1]);
    const std::int64_t hi = m[2].matched ? std::stoll(m[2]) : lo;
    if (lo > hi) throw UsageError("--" + name + " range " + s + " is empty");
    return {lo, hi};
}

// Fixed CSV columns: one slot per bound family.
const std::vector<std::string>& table_slots() {
    static const std::vector<std::string> slots{"levenshtein_eq3", "bours",       "kk",         "thm25",
                                                "liu_xing",        "improved_liu_xing", "lwgz", "lp_optimum",
                                                "lp_dual_certificate", "gv",   "matching_main_term", "refined_gv"};
    return slots;
}

std::string slot_of(const std::string& name) { return name.rfind("thm25", 0) == 0 ? "thm25" : name; }

struct TableRow {
    Params p;
    BoundReport report;
    std::optional<Rational> lev_envelope;
    std::optional<Rational> eq6_main;
};

std::string csv_value(const BoundValue& b) {
    if (!b.applicable) return "";
    if (b.value) return rational_cell(*b.value);
    return to_string(*b.approx, 16);
}

int cmd_table(const TableArgs& a) {
    const auto [n0, n1] = parse_range("n", a.n);
    const auto [q0, q1] = parse_range("q", a.q);
    const auto [d0, d1] = parse_range("d", a.d);
    std::vector<Params> points;
    for (std::int64_t n = n0; n <= n1; ++n)
        for (std::int64_t q = q0; q <= q1; ++q)
            for (std::int64_t d = d0; d <= d1; ++d) {
                if (d % 2 != 0 || n < 2 || q < 2 || d < 2 || d > 2 * n) continue;
                points.push_back(Params::make(n, q, d));
            }
    if (points.empty()) throw UsageError("the ranges contain no valid (n, q, even d) point");

    std::vector<TableRow> rows(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            TableRow& row = rows[i];
            row.p = points[i];
            row.report = evaluate_bounds(row.p);
            if (a.compare && row.p.d >= 4 && row.p.d <= 2 * row.p.n - 2) {
                row.lev_envelope = levenshtein_envelope(row.p);
                row.eq6_main = thm25_eq6_value(row.p.n, row.p.q, row.p.d) - thm25_u_term(row.p.n, row.p.q, row.p.d);
            }
        }
    };
    const unsigned nthreads = std::max(1u, a.threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    auto find_slot = [](const BoundReport& r, const std::string& slot) -> const BoundValue* {
        for (const auto& b : r.bounds)
            if (slot_of(b.name) == slot) return &b;
        return nullptr;
    };

    if (a.format == "json") {
        json out = json::array();
        for (const TableRow& row : rows) {
            json j = report_to_json(row.report, false);
            if (a.compare) {
                json c;
                c["levenshtein_envelope"] = row.lev_envelope ? rational_to_json(*row.lev_envelope) : json(nullptr);
                c["eq6_main_term"] = row.eq6_main ? rational_to_json(*row.eq6_main) : json(nullptr);
                j["compare"] = c;
            }
            out.push_back(std::move(j));
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "n,q,d,best_upper,best_lower";
    for (const auto& s : table_slots()) std::cout << "," << s;
    if (a.compare) std::cout << ",levenshtein_envelope,thm25_below_envelope,eq6_main_term,kk_below_eq6_main";
    std::cout << "\n";
    for (const TableRow& row : rows) {
        const BoundReport& r = row.report;
        std::cout << row.p.n << "," << row.p.q << "," << row.p.d << ","
                  << (r.best_upper.integer_value ? r.best_upper.integer_value->str() : "") << ","
                  << (r.best_lower.integer_value ? r.best_lower.integer_value->str() : "");
        for (const auto& s : table_slots()) {
            const BoundValue* b = find_slot(r, s);
            std::cout << "," << (b ? csv_value(*b) : "");
        }
        if (a.compare) {
            const BoundValue* thm = find_slot(r, "thm25");
            const BoundValue* kk = find_slot(r, "kk");
            std::cout << "," << (row.lev_envelope ? rational_cell(*row.lev_envelope) : "") << ",";
            if (row.lev_envelope && thm && thm->applicable) std::cout << (*thm->value < *row.lev_envelope ? "yes" : "no");
            std::cout << "," << (row.eq6_main ? rational_cell(*row.eq6_main) : "") << ",";
            if (row.eq6_main && kk && kk->applicable) std::cout << (*kk->value < *row.eq6_main ? "yes" : "no");
        }
        std::cout << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct LpArgs {
    std::int64_t n = 0, q = 0;
    std::optional<std::int64_t> s, d;
    std::string dump;
};

int cmd_lp(const LpArgs& a) {
    if (a.s.has_value() == a.d.has_value()) throw UsageError("give exactly one of --s and --d");
    std::int64_t s = 0;
    if (a.s) {
        s = *a.s;
    } else {
        const Params p = make_params(a.n, a.q, *a.d);
        s = p.s();
    }
    if (a.q < 2 || s < 1 || s > a.n - 2) throw UsageError("need q >= 2 and 1 <= s <= n-2");
    const LinearProgram lp = build_lp(a.n, a.q, s);
    if (!a.dump.empty()) {
        if (a.dump == "-") {
            write_lp_format(std::cout, lp);
            return kExitOk;
        }
        std::ofstream os(a.dump);
        if (!os) throw std::runtime_error("cannot write " + a.dump);
        write_lp_format(os, lp);
    }
    const LpSolution sol = solve_lp(lp);
    std::cout << "sphere-packing LP n=" << a.n << " q=" << a.q << " s=" << s << " (bounds D_q(n," << 2 * (a.n - s) << "))\n";
    for (const auto& row : lp.rows) {
        std::cout << "  " << std::left << std::setw(14) << row.label;
        bool first = true;
        for (const auto& [i, c] : row.coeffs) {
            std::cout << (first ? "" : " + ") << (c == 1 ? "" : c.str() + " ") << "x" << i;
            first = false;
        }
        std::cout << " <= " << row.rhs.str() << "\n";
    }
    std::cout << "M = " << to_string(sol.optimum) << " (floor " << floor_of(sol.optimum).str() << ")\n";
    std::cout << "x =";
    for (const auto& x : sol.x) std::cout << " " << to_string(x);
    std::cout << "\n";
    const DualCheck check = verify_dual_feasible(lp, dual_certificate(a.n, a.q, s));
    std::cout << "closed-form dual point: " << (check.feasible ? "feasible" : "INFEASIBLE: " + check.violation)
              << ", objective " << to_string(check.objective) << "\n";
    if (!a.dump.empty()) std::cout << "wrote " << a.dump << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds, constructions and exact values for q-ary insertion/deletion codes D_q(n,d)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "evaluate every bound at one (n,q,d)");
    bounds->add_option("--n", ba.n, "word length")->required();
    bounds->add_option("--q", ba.q, "alphabet size")->required();
    bounds->add_option("--d", ba.d, "minimum edit distance (odd d is rounded up)")->required();
    bounds->add_option("--format", ba.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    bounds->add_flag("--certified-only", ba.certified_only, "omit estimates");

    ExactArgs ea;
    auto* exact = app.add_subcommand("exact", "compute D_q(n,d) by exhaustive search");
    exact->add_option("--n", ea.n)->required();
    exact->add_option("--q", ea.q)->required();
    exact->add_option("--d", ea.d)->required();
    exact->add_option("--out", ea.out, "write the witness code to this file");
    exact->add_option("--time-budget", ea.time_budget, "seconds; 0 means unlimited")->check(CLI::NonNegativeNumber);
    exact->add_option("--vertex-cap", ea.vertex_cap, "largest q^n accepted");
    exact->add_flag("--no-cache", ea.no_cache, "neither read nor write the result cache");
    exact->add_option("--cache", ea.cache_path, "cache file (default $DQ_CACHE or ./dq_cache.jsonl)");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build an explicit code");
    construct->add_option("--n", ca.n)->required();
    construct->add_option("--q", ca.q)->required();
    construct->add_option("--d", ca.d)->required();
    construct->add_option("--method", ca.method)->required()->check(CLI::IsMember({"greedy-hypergraph", "rs-independent-set"}));
    construct->add_option("--lambda", ca.lambda, "window length for the nonrepeating filter (rs method)");
    construct->add_option("--alpha", ca.alpha, "comma-separated evaluation points (rs method)");
    construct->add_option("--order", ca.order, "generation or min-degree (rs method)")
        ->check(CLI::IsMember({"generation", "min-degree"}));
    construct->add_option("--out", ca.out, "write the code to this file");

    VerifyArgs va;
    std::int64_t verify_d = 0;
    auto* verify = app.add_subcommand("verify", "check the minimum edit distance of a code file");
    verify->add_option("file", va.file)->required();
    auto* verify_d_opt = verify->add_option("--d", verify_d, "required distance (defaults to the header value)");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "bounds over a grid of parameters");
    table->add_option("--n", ta.n, "a or a..b")->required();
    table->add_option("--q", ta.q, "a or a..b")->required();
    table->add_option("--d", ta.d, "a or a..b (odd values are skipped)")->required();
    table->add_option("--format", ta.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_flag("--compare", ta.compare, "add comparison columns");
    table->add_option("--threads", ta.threads, "worker threads")->check(CLI::Range(1u, 256u));

    LpArgs la;
    std::int64_t lp_s = 0, lp_d = 0;
    auto* lp = app.add_subcommand("lp", "solve the sphere-packing LP exactly");
    lp->add_option("--n", la.n)->required();
    lp->add_option("--q", la.q)->required();
    auto* lp_s_opt = lp->add_option("--s", lp_s, "LP index s = n - d/2");
    auto* lp_d_opt = lp->add_option("--d", lp_d, "distance; s is derived");
    lp->add_option("--dump", la.dump, "write the model in LP format ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bounds) return cmd_bounds(ba);
        if (*exact) return cmd_exact(ea);
        if (*construct) return cmd_construct(ca);
        if (*verify) {
            if (*verify_d_opt) va.d = verify_d;
            return cmd_verify(va);
        }
        if (*table) return cmd_table(ta);
        if (*lp) {
            if (*lp_s_opt) la.s = lp_s;
            if (*lp_d_opt) la.d = lp_d;
            return cmd_lp(la);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
