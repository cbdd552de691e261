#pragma once

// Identity tags and the report type shared by all verification suites.

#include "umbra/exactnum.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace umbra {

enum class IdentityTag {
    GfHybrid,
    GfMotzkin,
    GfMotzkinShift,
    GfHermiteShift,
    HermiteDup,
    MotzkinDup,
    AssocRec,
    MotzkinAdd,
    MotzkinConv,
    TelDup,
    TelGf,
    TelRec,
};

inline constexpr std::array<std::pair<IdentityTag, std::string_view>, 12> kIdentityTagNames{{
    {IdentityTag::GfHybrid, "GF-HYBRID"},
    {IdentityTag::GfMotzkin, "GF-MOTZKIN"},
    {IdentityTag::GfMotzkinShift, "GF-MOTZKIN-SHIFT"},
    {IdentityTag::GfHermiteShift, "GF-HERMITE-SHIFT"},
    {IdentityTag::HermiteDup, "HERMITE-DUP"},
    {IdentityTag::MotzkinDup, "MOTZKIN-DUP"},
    {IdentityTag::AssocRec, "ASSOC-REC"},
    {IdentityTag::MotzkinAdd, "MOTZKIN-ADD"},
    {IdentityTag::MotzkinConv, "MOTZKIN-CONV"},
    {IdentityTag::TelDup, "TEL-DUP"},
    {IdentityTag::TelGf, "TEL-GF"},
    {IdentityTag::TelRec, "TEL-REC"},
}};

inline std::string to_string(IdentityTag tag) {
    for (const auto& [t, name] : kIdentityTagNames) {
        if (t == tag) {
            return std::string(name);
        }
    }
    return "?";
}

inline std::optional<IdentityTag> parse_identity_tag(std::string_view name) {
    for (const auto& [t, n] : kIdentityTagNames) {
        if (n == name) {
            return t;
        }
    }
    return std::nullopt;
}

struct Counterexample {
    std::string params;
    std::string lhs;
    std::string rhs;
};

// Outcome of checking one identity over a parameter range. All
// comparisons behind a report are exact; `counterexample` holds the
// first (lexicographically smallest) failing parameter tuple.
struct VerificationReport {
    std::string identity;
    std::string range;
    long points = 0;
    long failures = 0;
    std::optional<Counterexample> counterexample;

    bool passed() const { return !counterexample.has_value(); }
};

// Range overrides for the verification drivers. Unset fields fall back
// to each identity's documented default range.
struct VerifyOptions {
    std::optional<unsigned> max_n;
    std::optional<unsigned> max_q;
    std::optional<unsigned> max_l;
    std::optional<unsigned> max_p;
    std::optional<std::size_t> order;
    std::optional<std::vector<unsigned>> m_values;
    std::optional<std::vector<std::pair<Rational, Rational>>> grid;
};

}  // namespace umbra
