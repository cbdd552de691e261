#pragma once

// Command-line front end. `run` is the whole program: it parses argv,
// executes exactly one subcommand, writes the result to `out`, and
// returns the process exit status:
//   0  success (including all-pass verification)
//   1  verification mismatch or runtime failure (I/O, network, bad data)
//   2  usage error (unknown subcommand/flag/value, violated precondition)

#include "umbra/exactnum.hpp"
#include "umbra/motzkin.hpp"
#include "umbra/oeis.hpp"
#include "umbra/oeis_fetch.hpp"
#include "umbra/render.hpp"
#include "umbra/telephone.hpp"
#include "umbra/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace umbra::cli {

// Directory holding the bundled b-file fixtures. Overridable at runtime
// via UMBRA_DATA_DIR; the build bakes in the source-tree default.
inline std::string data_dir() {
    if (const char* env = std::getenv("UMBRA_DATA_DIR")) {
        return env;
    }
#ifdef UMBRA_DATA_DIR_DEFAULT
    return UMBRA_DATA_DIR_DEFAULT;
#else
    return "data/oeis";
#endif
}

// Accepts "7" or "num/den" forms such as "-3/4".
inline Rational parse_rational_arg(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        return frac(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational number: '" + text + "' (expected N or N/D)");
    }
}

namespace detail {

struct SeqArgs {
    std::string family;
    unsigned max = 10;
    unsigned q = 1;
    unsigned m = 3;
    std::string format = "text";
};

struct TriangleArgs {
    std::string family;
    unsigned max = 7;
    std::string format = "table";
};

struct SeriesArgs {
    std::string tag;
    unsigned order = 12;
    unsigned q = 1;
    unsigned l = 0;
    unsigned m = 3;
    std::string x = "1";
    std::string y = "1";
    std::string format = "text";
};

struct VerifyArgs {
    std::string tag;
    std::optional<unsigned> max_n;
    std::optional<unsigned> max_q;
    std::optional<unsigned> max_l;
    std::optional<unsigned> max_p;
    std::optional<std::size_t> order;
    std::vector<unsigned> m_values;
    std::string format = "text";
};

struct OeisCheckArgs {
    std::string id;
    std::string against;
    unsigned q = 1;
    unsigned m = 3;
    bool offline = false;
    std::string format = "text";
};

struct OeisFetchArgs {
    std::string id;
    bool offline = false;
};

// Sequence values for a named family, already rendered to strings.
inline std::vector<std::string> family_values(const std::string& family, unsigned max, unsigned q,
                                              unsigned m, nlohmann::json& params) {
    std::vector<std::string> values;
    values.reserve(max + 1);
    if (family == "motzkin") {
        for (unsigned n = 0; n <= max; ++n) {
            values.push_back(motzkin(n).str());
        }
    } else if (family == "telephone") {
        for (unsigned n = 0; n <= max; ++n) {
            values.push_back(telephone(n).str());
        }
    } else if (family == "assoc-motzkin") {
        params["q"] = q;
        for (unsigned n = 0; n <= max; ++n) {
            values.push_back(assoc_motzkin(n, q).str());
        }
    } else if (family == "tilde-motzkin") {
        params["q"] = q;
        for (unsigned n = 0; n <= max; ++n) {
            values.push_back(tilde_motzkin(n, q).str());
        }
    } else if (family == "gen-telephone") {
        params["m"] = m;
        for (unsigned n = 0; n <= max; ++n) {
            values.push_back(gen_telephone(n, m).str());
        }
    } else {
        throw std::invalid_argument("unknown sequence family '" + family +
                                    "' (expected motzkin, telephone, assoc-motzkin, tilde-motzkin "
                                    "or gen-telephone)");
    }
    return values;
}

inline int run_seq(const SeqArgs& args, std::ostream& out) {
    nlohmann::json params{{"family", args.family}, {"max", args.max}};
    const auto values = family_values(args.family, args.max, args.q, args.m, params);
    if (args.format == "json") {
        out << sequence_to_json(values, std::move(params)).dump(2) << '\n';
    } else {
        out << render_values_text(values);
    }
    return 0;
}

inline int run_triangle(const TriangleArgs& args, std::ostream& out) {
    TriangleDoc doc;
    doc.family = args.family;
    if (args.family == "motzkin") {
        Triangle t = motzkin_triangle(args.max);
        doc.rows = std::move(t.rows);
        doc.totals = std::move(t.row_sums);
    } else {
        for (auto& row : telephone_triangle(args.max)) {
            doc.rows.push_back(std::move(row.coeffs));
            doc.totals.push_back(std::move(row.total));
        }
    }
    out << render_triangle(doc, *parse_format(args.format));
    return 0;
}

// The closed-form side of a generating-function identity, truncated.
inline Series series_for_tag(const SeriesArgs& args, nlohmann::json& params) {
    const std::size_t order = args.order;
    Series t(order == 0 ? 1 : order);
    t.coeff(1) = 1;
    t = t.truncated(order);
    if (args.tag == "GF-MOTZKIN") {
        return inflate(cq_series(1, order), 2, Rational(1)) * exp(t);
    }
    if (args.tag == "GF-HYBRID") {
        const Rational x = parse_rational_arg(args.x);
        const Rational y = parse_rational_arg(args.y);
        params["q"] = args.q;
        params["x"] = x.str();
        params["y"] = y.str();
        return inflate(cq_series(args.q, order), 2, y) * exp(t * x);
    }
    if (args.tag == "GF-MOTZKIN-SHIFT") {
        params["l"] = args.l;
        return motzkin_mu_series(args.l, order) * exp(t);
    }
    if (args.tag == "GF-HERMITE-SHIFT") {
        const Rational x = parse_rational_arg(args.x);
        const Rational y = parse_rational_arg(args.y);
        params["l"] = args.l;
        params["x"] = x.str();
        params["y"] = y.str();
        Series arg(order == 0 ? 2 : std::max<std::size_t>(order, 2));
        arg.coeff(1) = x;
        arg.coeff(2) = y;
        arg = arg.truncated(order);
        return hermite_shift_polynomial(args.l, x, y, order) * exp(arg);
    }
    if (args.tag == "TEL-GF") {
        if (args.m < 2) {
            throw std::domain_error("TEL-GF: order m must be >= 2");
        }
        params["m"] = args.m;
        Series arg(std::max<std::size_t>(order, args.m));
        arg.coeff(1) = 1;
        arg.coeff(args.m) += frac(1, args.m);
        arg = arg.truncated(order);
        return exp(arg);
    }
    throw std::invalid_argument("'" + args.tag +
                                "' is not a generating-function identity (expected GF-HYBRID, "
                                "GF-MOTZKIN, GF-MOTZKIN-SHIFT, GF-HERMITE-SHIFT or TEL-GF)");
}

inline int run_series(const SeriesArgs& args, std::ostream& out) {
    nlohmann::json params{{"series", args.tag}, {"order", args.order}};
    const Series s = series_for_tag(args, params);
    std::vector<std::string> values;
    values.reserve(s.order() + 1);
    for (std::size_t i = 0; i <= s.order(); ++i) {
        values.push_back(s[i].str());
    }
    if (args.format == "json") {
        out << sequence_to_json(values, std::move(params)).dump(2) << '\n';
    } else {
        out << render_values_text(values);
    }
    return 0;
}

inline int run_verify(const VerifyArgs& args, std::ostream& out) {
    VerifyOptions opts;
    opts.max_n = args.max_n;
    opts.max_q = args.max_q;
    opts.max_l = args.max_l;
    opts.max_p = args.max_p;
    opts.order = args.order;
    if (!args.m_values.empty()) {
        opts.m_values = args.m_values;
    }

    std::vector<VerificationReport> reports;
    if (args.tag == "all") {
        reports = verify_all(opts);
    } else {
        const auto tag = parse_identity_tag(args.tag);
        if (!tag) {
            throw std::invalid_argument("unknown identity tag '" + args.tag + "' (run with --help)");
        }
        reports.push_back(run_identity(*tag, opts));
    }

    bool all_passed = true;
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
    }
    if (args.format == "json") {
        if (args.tag == "all") {
            out << reports_to_json(reports).dump(2) << '\n';
        } else {
            out << report_to_json(reports.front()).dump(2) << '\n';
        }
    } else {
        for (const auto& r : reports) {
            out << render_report_text(r);
        }
    }
    return all_passed ? 0 : 1;
}

inline int run_oeis_check(const OeisCheckArgs& args, std::ostream& out) {
    if (!valid_id(args.id)) {
        throw std::invalid_argument("malformed OEIS id '" + args.id + "' (expected A followed by 6 digits)");
    }
    if (args.against == "assoc-motzkin") {
        throw std::invalid_argument("assoc-motzkin is not integer-valued; compare tilde-motzkin instead");
    }

    SequenceFixture fixture;
    const std::filesystem::path path =
        std::filesystem::path(data_dir()) / ("b" + args.id.substr(1) + ".txt");
    if (std::filesystem::exists(path)) {
        fixture = load_fixture(path);
    } else {
        fixture = parse_bfile(fetch_bfile(args.id, args.offline), args.id);
    }

    const long long last = fixture.offset + static_cast<long long>(fixture.terms.size()) - 1;
    if (last < 0) {
        throw std::runtime_error("fixture " + args.id + " holds no terms at non-negative indices");
    }
    nlohmann::json params{{"id", args.id}, {"against", args.against}};
    const auto values =
        family_values(args.against, static_cast<unsigned>(last), args.q, args.m, params);
    std::vector<BigInt> computed;
    computed.reserve(values.size());
    for (const auto& v : values) {
        computed.emplace_back(v);
    }

    VerificationReport report = compare_prefix(fixture, computed, 0);
    report.identity += " vs " + args.against;
    if (args.format == "json") {
        out << report_to_json(report).dump(2) << '\n';
    } else {
        out << render_report_text(report);
    }
    return report.passed() ? 0 : 1;
}

inline int run_oeis_fetch(const OeisFetchArgs& args, std::ostream& out) {
    out << fetch_bfile(args.id, args.offline);
    return 0;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Motzkin/telephone number toolkit: sequences, coefficient triangles,\n"
                 "generating-function series, identity verification, and OEIS cross-checks.\n"
                 "All arithmetic is exact (big rationals); rationals print as num/den."};
    app.require_subcommand(1);

    detail::SeqArgs seq_args;
    auto* seq = app.add_subcommand("seq", "Print a sequence prefix (indices 0..max, space separated)");
    seq->add_option("family", seq_args.family,
                    "one of: motzkin, telephone, assoc-motzkin, tilde-motzkin, gen-telephone")
        ->required();
    seq->add_option("--max", seq_args.max, "largest index n, inclusive (default 10)");
    seq->add_option("--q", seq_args.q, "order q for assoc-/tilde-motzkin (default 1)");
    seq->add_option("--m", seq_args.m, "order m for gen-telephone, m >= 2 (default 3)");
    seq->add_option("--format", seq_args.format, "text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    detail::TriangleArgs tri_args;
    auto* tri = app.add_subcommand("triangle", "Print a coefficient triangle with row totals");
    tri->add_option("family", tri_args.family, "motzkin or telephone")
        ->required()
        ->check(CLI::IsMember({"motzkin", "telephone"}));
    tri->add_option("--max", tri_args.max, "largest row n, inclusive (default 7)");
    tri->add_option("--format", tri_args.format, "table, csv or json (default table)")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    detail::SeriesArgs ser_args;
    auto* ser = app.add_subcommand(
        "series", "Print the closed-form side of a generating-function identity, truncated");
    ser->add_option("tag", ser_args.tag,
                    "one of: GF-HYBRID, GF-MOTZKIN, GF-MOTZKIN-SHIFT, GF-HERMITE-SHIFT, TEL-GF")
        ->required();
    ser->add_option("--order", ser_args.order, "truncation order (default 12)");
    ser->add_option("--q", ser_args.q, "q for GF-HYBRID (default 1)");
    ser->add_option("--l", ser_args.l, "shift l for GF-MOTZKIN-SHIFT / GF-HERMITE-SHIFT (default 0)");
    ser->add_option("--m", ser_args.m, "m for TEL-GF, m >= 2 (default 3)");
    ser->add_option("--x", ser_args.x, "rational x argument, N or N/D (default 1)");
    ser->add_option("--y", ser_args.y, "rational y argument, N or N/D (default 1)");
    ser->add_option("--format", ser_args.format, "text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    detail::VerifyArgs ver_args;
    auto* ver = app.add_subcommand("verify", "Check an identity exactly over a parameter range");
    ver->add_option("tag", ver_args.tag, "an identity tag, or 'all'")->required();
    ver->add_option("--max", ver_args.max_n, "upper n bound (identity-specific default)");
    ver->add_option("--q", ver_args.max_q, "upper q bound");
    ver->add_option("--l", ver_args.max_l, "upper shift bound");
    ver->add_option("--p", ver_args.max_p, "upper p bound");
    ver->add_option("--order", ver_args.order, "series truncation order");
    ver->add_option("--m", ver_args.m_values, "orders m to test (repeatable)");
    ver->add_option("--format", ver_args.format, "text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    auto* oeis = app.add_subcommand("oeis", "Compare against or fetch OEIS b-files");
    oeis->require_subcommand(1);
    detail::OeisCheckArgs check_args;
    auto* check = oeis->add_subcommand(
        "check", "Compare a computed family against a b-file (bundled fixture first)");
    check->add_option("id", check_args.id, "OEIS id, e.g. A001006")->required();
    check->add_option("--against", check_args.against,
                      "family to compute: motzkin, telephone, tilde-motzkin, gen-telephone")
        ->required();
    check->add_option("--q", check_args.q, "q for tilde-motzkin (default 1)");
    check->add_option("--m", check_args.m, "m for gen-telephone (default 3)");
    check->add_flag("--offline", check_args.offline, "never touch the network (bundled fixtures only)");
    check->add_option("--format", check_args.format, "text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    detail::OeisFetchArgs fetch_args;
    auto* fetch = oeis->add_subcommand("fetch", "Fetch a b-file and print it (for refreshing fixtures)");
    fetch->add_option("id", fetch_args.id, "OEIS id, e.g. A000217")->required();
    fetch->add_flag("--offline", fetch_args.offline, "fail instead of touching the network");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) {
            target = target->get_subcommands().front();
        }
        out << target->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << "run '--help' for usage\n";
        return 2;
    }

    try {
        if (seq->parsed()) {
            return detail::run_seq(seq_args, out);
        }
        if (tri->parsed()) {
            return detail::run_triangle(tri_args, out);
        }
        if (ser->parsed()) {
            return detail::run_series(ser_args, out);
        }
        if (ver->parsed()) {
            return detail::run_verify(ver_args, out);
        }
        if (check->parsed()) {
            return detail::run_oeis_check(check_args, out);
        }
        if (fetch->parsed()) {
            return detail::run_oeis_fetch(fetch_args, out);
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace umbra::cli
