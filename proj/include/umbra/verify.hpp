#pragma once

// Single entry point for running any identity check by tag, and for
// running the whole battery.

#include "umbra/hermite.hpp"
#include "umbra/motzkin.hpp"
#include "umbra/report.hpp"
#include "umbra/telephone.hpp"

#include <vector>

namespace umbra {

inline VerificationReport run_identity(IdentityTag tag, const VerifyOptions& opts = {}) {
    switch (tag) {
        case IdentityTag::GfHermiteShift:
        case IdentityTag::HermiteDup:
            return verify_hermite_identity(tag, opts);
        case IdentityTag::GfHybrid:
        case IdentityTag::GfMotzkin:
        case IdentityTag::GfMotzkinShift:
        case IdentityTag::MotzkinDup:
        case IdentityTag::AssocRec:
        case IdentityTag::MotzkinAdd:
        case IdentityTag::MotzkinConv:
            return verify_motzkin_identity(tag, opts);
        case IdentityTag::TelDup:
        case IdentityTag::TelGf:
        case IdentityTag::TelRec:
            return verify_telephone_identity(tag, opts);
    }
    throw std::invalid_argument("run_identity: unknown tag");
}

inline std::vector<IdentityTag> all_identity_tags() {
    std::vector<IdentityTag> tags;
    tags.reserve(kIdentityTagNames.size());
    for (const auto& [tag, name] : kIdentityTagNames) {
        tags.push_back(tag);
    }
    return tags;
}

inline std::vector<VerificationReport> verify_all(const VerifyOptions& opts = {}) {
    std::vector<VerificationReport> reports;
    for (IdentityTag tag : all_identity_tags()) {
        reports.push_back(run_identity(tag, opts));
    }
    return reports;
}

}  // namespace umbra
