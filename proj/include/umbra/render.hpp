#pragma once

// Output formatting for the command-line tool: coefficient triangles as
// aligned text tables (blank above the diagonal, like the source
// tables), CSV with a header row, and JSON documents in which every big
// number is a decimal string.

#include "umbra/exactnum.hpp"
#include "umbra/report.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace umbra {

enum class Format { Table, Csv, Json };

inline std::optional<Format> parse_format(std::string_view name) {
    if (name == "table") {
        return Format::Table;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "json") {
        return Format::Json;
    }
    return std::nullopt;
}

// A triangle plus its row totals, decoupled from how it was computed.
struct TriangleDoc {
    std::string family;
    std::vector<std::vector<BigInt>> rows;  // rows[n] has n+1 entries
    std::vector<BigInt> totals;
};

namespace detail {

inline std::string pad_left(const std::string& text, std::size_t width) {
    return text.size() >= width ? text : std::string(width - text.size(), ' ') + text;
}

}  // namespace detail

inline std::string render_triangle_table(const TriangleDoc& doc) {
    const std::size_t cols = doc.rows.empty() ? 0 : doc.rows.back().size();
    std::vector<std::size_t> width(cols, 1);
    for (std::size_t s = 0; s < cols; ++s) {
        width[s] = std::to_string(s).size();
        for (const auto& row : doc.rows) {
            if (s < row.size()) {
                width[s] = std::max(width[s], row[s].str().size());
            }
        }
    }
    const std::string corner = "n\\s";
    std::size_t label_width = corner.size();
    std::size_t total_width = std::string("total").size();
    for (std::size_t n = 0; n < doc.rows.size(); ++n) {
        label_width = std::max(label_width, std::to_string(n).size());
        total_width = std::max(total_width, doc.totals[n].str().size());
    }

    std::ostringstream os;
    os << detail::pad_left(corner, label_width);
    for (std::size_t s = 0; s < cols; ++s) {
        os << "  " << detail::pad_left(std::to_string(s), width[s]);
    }
    os << " | " << detail::pad_left("total", total_width) << '\n';

    std::size_t rule = label_width + 3 + total_width;
    for (std::size_t s = 0; s < cols; ++s) {
        rule += width[s] + 2;
    }
    os << std::string(rule, '-') << '\n';

    for (std::size_t n = 0; n < doc.rows.size(); ++n) {
        os << detail::pad_left(std::to_string(n), label_width);
        for (std::size_t s = 0; s < cols; ++s) {
            const std::string cell = s < doc.rows[n].size() ? doc.rows[n][s].str() : "";
            os << "  " << detail::pad_left(cell, width[s]);
        }
        os << " | " << detail::pad_left(doc.totals[n].str(), total_width) << '\n';
    }
    return os.str();
}

inline std::string render_triangle_csv(const TriangleDoc& doc) {
    const std::size_t cols = doc.rows.empty() ? 0 : doc.rows.back().size();
    std::ostringstream os;
    os << 'n';
    for (std::size_t s = 0; s < cols; ++s) {
        os << ",s" << s;
    }
    os << ",total\n";
    for (std::size_t n = 0; n < doc.rows.size(); ++n) {
        os << n;
        for (std::size_t s = 0; s < cols; ++s) {
            os << ',';
            if (s < doc.rows[n].size()) {
                os << doc.rows[n][s];
            }
        }
        os << ',' << doc.totals[n] << '\n';
    }
    return os.str();
}

inline nlohmann::json triangle_to_json(const TriangleDoc& doc) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t n = 0; n < doc.rows.size(); ++n) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& v : doc.rows[n]) {
            coeffs.push_back(v.str());
        }
        rows.push_back({{"n", n}, {"coeffs", std::move(coeffs)}, {"total", doc.totals[n].str()}});
    }
    return {{"kind", "triangle"},
            {"params", {{"family", doc.family}, {"max", doc.rows.empty() ? 0 : doc.rows.size() - 1}}},
            {"rows", std::move(rows)}};
}

inline std::string render_triangle(const TriangleDoc& doc, Format format) {
    switch (format) {
        case Format::Table:
            return render_triangle_table(doc);
        case Format::Csv:
            return render_triangle_csv(doc);
        case Format::Json:
            return triangle_to_json(doc).dump(2) + "\n";
    }
    return {};
}

// Values arrive pre-rendered ("num/den" for rationals, plain decimal for
// integers), so one surface serves every family.
inline std::string render_values_text(const std::vector<std::string>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << (i ? " " : "") << values[i];
    }
    os << '\n';
    return os.str();
}

inline nlohmann::json sequence_to_json(const std::vector<std::string>& values, nlohmann::json params) {
    return {{"kind", "sequence"}, {"params", std::move(params)}, {"values", values}};
}

inline nlohmann::json report_result_json(const VerificationReport& report) {
    nlohmann::json result = {{"identity", report.identity},
                             {"range", report.range},
                             {"passed", report.passed()},
                             {"points", report.points},
                             {"failures", report.failures},
                             {"counterexample", nullptr}};
    if (report.counterexample) {
        result["counterexample"] = {{"params", report.counterexample->params},
                                    {"lhs", report.counterexample->lhs},
                                    {"rhs", report.counterexample->rhs}};
    }
    return result;
}

inline nlohmann::json report_to_json(const VerificationReport& report) {
    return {{"kind", "report"},
            {"params", {{"identity", report.identity}, {"range", report.range}}},
            {"result", report_result_json(report)}};
}

inline nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports) {
    bool all_passed = true;
    nlohmann::json items = nlohmann::json::array();
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        items.push_back(report_result_json(r));
    }
    return {{"kind", "report"},
            {"params", {{"identity", "all"}}},
            {"result", {{"passed", all_passed}, {"reports", std::move(items)}}}};
}

inline std::string render_report_text(const VerificationReport& report) {
    std::ostringstream os;
    os << report.identity << " [" << report.range << "]: " << (report.points - report.failures) << '/'
       << report.points << " pass";
    if (!report.passed()) {
        os << ", " << report.failures << " FAIL\n";
        os << "  counterexample " << report.counterexample->params << ": lhs = " << report.counterexample->lhs
           << ", rhs = " << report.counterexample->rhs;
    }
    os << '\n';
    return os.str();
}

}  // namespace umbra
