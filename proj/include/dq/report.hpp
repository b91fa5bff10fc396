#pragma once

// JSON serialization of bounds and result records, and the append-only
// JSON-lines cache of exact values.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dq/bound_value.hpp"
#include "dq/bounds.hpp"
#include "dq/code.hpp"

namespace dq {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

inline json rational_to_json(const Rational& r) {
    return json{{"num", boost::multiprecision::numerator(r).str()}, {"den", boost::multiprecision::denominator(r).str()}};
}

inline Rational rational_from_json(const json& j) {
    const Integer num(j.at("num").get<std::string>());
    const Integer den(j.at("den").get<std::string>());
    return make_rational(num, den);
}

inline json bound_to_json(const BoundValue& b) {
    json j;
    j["name"] = b.name;
    j["kind"] = kind_name(b.kind);
    j["applicable"] = b.applicable;
    j["certified"] = is_certified(b.kind);
    if (b.report_only) j["report_only"] = true;
    j["value"] = b.value ? rational_to_json(*b.value) : json(nullptr);
    j["approx"] = b.approx ? json(to_string(*b.approx, 16)) : json(nullptr);
    j["integer_value"] = b.integer_value ? json(b.integer_value->str()) : json(nullptr);
    j["condition"] = b.condition_note;
    if (!b.detail.empty()) j["detail"] = b.detail;
    return j;
}

inline BoundValue bound_from_json(const json& j) {
    BoundValue b;
    b.name = j.at("name").get<std::string>();
    b.kind = kind_from_name(j.at("kind").get<std::string>());
    b.applicable = j.at("applicable").get<bool>();
    b.report_only = j.value("report_only", false);
    if (!j.at("value").is_null()) b.value = rational_from_json(j.at("value"));
    if (!j.at("approx").is_null()) b.approx = Real(j.at("approx").get<std::string>());
    if (!j.at("integer_value").is_null()) b.integer_value = Integer(j.at("integer_value").get<std::string>());
    b.condition_note = j.value("condition", "");
    b.detail = j.value("detail", "");
    return b;
}

inline json params_to_json(const Params& p) { return json{{"n", p.n}, {"q", p.q}, {"d", p.d}}; }

inline std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct ResultRecord {
    Params params;
    std::vector<BoundValue> bounds;
    std::optional<Integer> exact;
    std::vector<std::string> witness;  // one space-separated codeword per entry
    std::string created_at;
    std::string tool_version = kToolVersion;
};

inline json record_to_json(const ResultRecord& r) {
    json j;
    j["params"] = params_to_json(r.params);
    j["bounds"] = json::array();
    for (const auto& b : r.bounds) j["bounds"].push_back(bound_to_json(b));
    j["exact"] = r.exact ? json(r.exact->str()) : json(nullptr);
    if (!r.witness.empty()) j["witness"] = r.witness;
    j["created_at"] = r.created_at;
    j["tool_version"] = r.tool_version;
    return j;
}

inline ResultRecord record_from_json(const json& j) {
    ResultRecord r;
    const auto& p = j.at("params");
    r.params = Params::make(p.at("n").get<std::int64_t>(), p.at("q").get<std::int64_t>(), p.at("d").get<std::int64_t>());
    for (const auto& b : j.at("bounds")) r.bounds.push_back(bound_from_json(b));
    if (!j.at("exact").is_null()) r.exact = Integer(j.at("exact").get<std::string>());
    if (j.contains("witness")) r.witness = j.at("witness").get<std::vector<std::string>>();
    r.created_at = j.value("created_at", "");
    r.tool_version = j.value("tool_version", "");
    return r;
}

inline std::vector<std::string> witness_lines(const Code& code) {
    std::vector<std::string> out;
    for (const auto& w : code.words) out.push_back(w.str());
    return out;
}

inline Code code_from_witness(const Params& p, const std::vector<std::string>& lines) {
    std::string text = std::to_string(p.q) + " " + std::to_string(p.n) + "\n";
    for (const auto& l : lines) text += l + "\n";
    Code c = code_from_string(text).code;
    c.provenance = "cache";
    return c;
}

/// Append-only JSON-lines store of exact results keyed by (n, q, d).
class ResultCache {
public:
    explicit ResultCache(std::string path) : path_(std::move(path)) {}

    static std::string default_path() {
        const char* env = std::getenv("DQ_CACHE");
        return env && *env ? env : "./dq_cache.jsonl";
    }

    const std::string& path() const { return path_; }

    /// Latest record for p that carries an exact value. Malformed lines are skipped.
    std::optional<ResultRecord> find(const Params& p) const {
        std::ifstream in(path_);
        if (!in) return std::nullopt;
        std::optional<ResultRecord> found;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                const json j = json::parse(line);
                ResultRecord r = record_from_json(j);
                if (r.params == p && r.exact) found = std::move(r);
            } catch (const std::exception&) {
                continue;
            }
        }
        return found;
    }

    void append(const ResultRecord& r) const {
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cannot open cache file " + path_);
        out << record_to_json(r).dump() << '\n';
    }

private:
    std::string path_;
};

}  // namespace dq
