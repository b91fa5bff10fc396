#pragma once

// Codes (sets of equal-length words), pairwise distance verification and the
// plain-text code file format:
//   line 1: "q n [d]"
//   then one codeword per line, n space-separated symbols in [0, q-1].

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dq/words.hpp"

namespace dq {

struct Code {
    std::size_t n = 0;
    std::uint32_t q = 2;
    std::vector<Word> words;
    /// Set only after a successful verify at this distance.
    std::optional<std::int64_t> verified_min_distance;
    std::string provenance;

    std::size_t size() const { return words.size(); }
    bool empty() const { return words.empty(); }
};

struct VerifyResult {
    bool ok = false;
    /// 2n+1 stands for "no pair" (fewer than two words).
    std::int64_t min_distance = 0;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

inline VerifyResult verify_code_distance(const Code& code, std::int64_t d) {
    for (const Word& w : code.words) {
        if (w.size() != code.n) throw std::domain_error("verify_code_distance: mixed word lengths");
        if (w.alphabet_size() != code.q) throw std::domain_error("verify_code_distance: mixed alphabets");
    }
    VerifyResult r;
    r.min_distance = 2 * static_cast<std::int64_t>(code.n) + 1;
    for (std::size_t a = 0; a < code.words.size(); ++a)
        for (std::size_t b = a + 1; b < code.words.size(); ++b) {
            const std::int64_t dist = edit_distance(code.words[a], code.words[b]);
            if (dist < r.min_distance) {
                r.min_distance = dist;
                r.witness = std::make_pair(a, b);
            }
        }
    r.ok = r.min_distance >= d;
    if (r.ok) r.witness.reset();
    return r;
}

/// Verifies and records the distance, or throws std::logic_error.
inline void certify_code(Code& code, std::int64_t d) {
    const VerifyResult r = verify_code_distance(code, d);
    if (!r.ok)
        throw std::logic_error("constructed code fails distance " + std::to_string(d) + " (found " +
                               std::to_string(r.min_distance) + ")");
    code.verified_min_distance = d;
}

// ---------------------------------------------------------------------------
// File format.

class CodeParseError : public std::runtime_error {
public:
    CodeParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct CodeFile {
    Code code;
    std::optional<std::int64_t> d;
};

inline void write_code(std::ostream& os, const Code& code, std::optional<std::int64_t> d = std::nullopt) {
    os << code.q << ' ' << code.n;
    if (d) os << ' ' << *d;
    os << '\n';
    for (const Word& w : code.words) os << w.str() << '\n';
}

inline std::string code_to_string(const Code& code, std::optional<std::int64_t> d = std::nullopt) {
    std::ostringstream os;
    write_code(os, code, d);
    return os.str();
}

namespace detail {
inline std::vector<std::int64_t> parse_integers(const std::string& line, std::size_t lineno) {
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] >= '0' && line[j] <= '9') ++j;
        if (j == i || (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r'))
            throw CodeParseError(lineno, "expected base-10 integers");
        if (j - i > 18) throw CodeParseError(lineno, "integer too large");
        out.push_back(std::stoll(line.substr(i, j - i)));
        i = j;
    }
    return out;
}
}  // namespace detail

inline CodeFile read_code(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    CodeFile out;
    if (!std::getline(is, line)) throw CodeParseError(1, "missing header line \"q n [d]\"");
    ++lineno;
    const auto header = detail::parse_integers(line, lineno);
    if (header.size() < 2 || header.size() > 3) throw CodeParseError(lineno, "header must be \"q n [d]\"");
    if (header[0] < 2) throw CodeParseError(lineno, "q must be at least 2");
    if (header[1] < 1) throw CodeParseError(lineno, "n must be positive");
    out.code.q = static_cast<std::uint32_t>(header[0]);
    out.code.n = static_cast<std::size_t>(header[1]);
    if (header.size() == 3) out.d = header[2];
    out.code.provenance = "file";
    while (std::getline(is, line)) {
        ++lineno;
        const auto symbols = detail::parse_integers(line, lineno);
        if (symbols.empty()) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        }
        if (symbols.size() != out.code.n)
            throw CodeParseError(lineno, "expected " + std::to_string(out.code.n) + " symbols, got " +
                                             std::to_string(symbols.size()));
        std::vector<Symbol> s;
        for (auto v : symbols) {
            if (v >= static_cast<std::int64_t>(out.code.q))
                throw CodeParseError(lineno, "symbol " + std::to_string(v) + " not below q=" + std::to_string(out.code.q));
            s.push_back(static_cast<Symbol>(v));
        }
        out.code.words.emplace_back(std::move(s), out.code.q);
    }
    return out;
}

inline CodeFile code_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_code(is);
}

}  // namespace dq
