#pragma once

// OEIS b-file handling: parsing, rendering, fixture loading, and exact
// prefix comparison between a fixture and locally computed terms. The
// b-file format is one "index value" pair per line, with optional
// '#'-prefixed comment lines; LF and CRLF line endings are accepted.

#include "umbra/exactnum.hpp"
#include "umbra/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace umbra {

struct SequenceFixture {
    std::string id;  // "A" + 6 digits, may be empty for ad-hoc parses
    long long offset = 0;
    std::vector<BigInt> terms;
};

// Malformed b-file input; carries the 1-based line number of the offence.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline bool valid_id(std::string_view id) {
    if (id.size() != 7 || id[0] != 'A') {
        return false;
    }
    return std::all_of(id.begin() + 1, id.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

namespace detail {

inline bool is_integer_token(std::string_view tok) {
    if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
        tok.remove_prefix(1);
    }
    return !tok.empty() &&
           std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace detail

inline SequenceFixture parse_bfile(const std::string& text, std::string id = "") {
    SequenceFixture fixture;
    fixture.id = std::move(id);

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_terms = false;
    long long next_index = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string index_tok;
        std::string value_tok;
        std::string extra;
        fields >> index_tok >> value_tok;
        if (!detail::is_integer_token(index_tok) || !detail::is_integer_token(value_tok)) {
            throw ParseError("malformed b-file line: expected 'index value'", line_no);
        }
        if (fields >> extra) {
            throw ParseError("malformed b-file line: trailing content '" + extra + "'", line_no);
        }
        const long long index = std::stoll(index_tok);
        if (!have_terms) {
            fixture.offset = index;
            next_index = index;
            have_terms = true;
        }
        if (index != next_index) {
            throw ParseError("non-consecutive index " + index_tok + " (expected " +
                                 std::to_string(next_index) + ")",
                             line_no);
        }
        fixture.terms.emplace_back(value_tok[0] == '+' ? value_tok.substr(1) : value_tok);
        ++next_index;
    }
    if (!have_terms) {
        throw ParseError("b-file contains no terms", line_no);
    }
    return fixture;
}

inline std::string render_bfile(const SequenceFixture& fixture) {
    std::ostringstream os;
    for (std::size_t i = 0; i < fixture.terms.size(); ++i) {
        os << (fixture.offset + static_cast<long long>(i)) << ' ' << fixture.terms[i] << '\n';
    }
    return os.str();
}

// Loads a b-file from disk; the id is recovered from a "bXXXXXX.txt"
// file name when not supplied by the content.
inline SequenceFixture load_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open fixture file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string id;
    const std::string stem = path.stem().string();
    if (stem.size() == 7 && stem[0] == 'b') {
        std::string candidate = "A" + stem.substr(1);
        if (valid_id(candidate)) {
            id = std::move(candidate);
        }
    }
    return parse_bfile(buf.str(), id);
}

// Exact comparison over the overlapping index range of a fixture and a
// computed sequence starting at computed_offset.
inline VerificationReport compare_prefix(const SequenceFixture& fixture,
                                         const std::vector<BigInt>& computed,
                                         long long computed_offset) {
    const long long fixture_last = fixture.offset + static_cast<long long>(fixture.terms.size()) - 1;
    const long long computed_last = computed_offset + static_cast<long long>(computed.size()) - 1;
    const long long lo = std::max(fixture.offset, computed_offset);
    const long long hi = std::min(fixture_last, computed_last);
    if (fixture.terms.empty() || computed.empty() || lo > hi) {
        throw std::invalid_argument("compare_prefix: index ranges do not overlap");
    }

    VerificationReport report;
    report.identity = fixture.id.empty() ? std::string("OEIS") : "OEIS " + fixture.id;
    {
        std::ostringstream os;
        os << "indices " << lo << ".." << hi;
        report.range = os.str();
    }
    for (long long i = lo; i <= hi; ++i) {
        const BigInt& expected = fixture.terms[static_cast<std::size_t>(i - fixture.offset)];
        const BigInt& actual = computed[static_cast<std::size_t>(i - computed_offset)];
        ++report.points;
        if (expected != actual) {
            ++report.failures;
            if (!report.counterexample) {
                std::ostringstream os;
                os << "index=" << i;
                report.counterexample = Counterexample{os.str(), actual.str(), expected.str()};
            }
        }
    }
    return report;
}

}  // namespace umbra
