#pragma once

// Telephone numbers T(n) = H_n(1, 1/2), their coefficient triangle
// t_{n,s} = C(n,s) h_s(1/2) built on the Hermite numbers h_s(y), and the
// generalized family T_n^(m) = H_n^(m)(1, 1/m), with verification of the
// duplication, generating-function and recurrence identities.

#include "umbra/exactnum.hpp"
#include "umbra/hermite.hpp"
#include "umbra/report.hpp"
#include "umbra/series.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace umbra {

// h_s(y): 0 for odd s; for s = 2k, y^k (2k)!/k!.
inline Rational hermite_number(unsigned s, const Rational& y) {
    if (s % 2 != 0) {
        return Rational(0);
    }
    const unsigned k = s / 2;
    return pow_rational(y, k) * Rational(factorial(2 * k) / factorial(k));
}

inline BigInt telephone(unsigned n) {
    return to_integer(hermite2(n, Rational(1), frac(1, 2)), "telephone");
}

// Triangle entry t_{n,s} = C(n,s) h_s(1/2); requires s <= n. Integral:
// h_{2k}(1/2) = (2k)!/(2^k k!) is the odd double factorial.
inline BigInt telephone_coeff(unsigned n, unsigned s) {
    if (s > n) {
        throw std::out_of_range("telephone_coeff: column s exceeds row n");
    }
    return to_integer(Rational(binomial(n, static_cast<long long>(s))) * hermite_number(s, frac(1, 2)),
                      "telephone_coeff");
}

struct TelephoneRow {
    unsigned n = 0;
    std::vector<BigInt> coeffs;  // t_{n,s} for s = 0..n
    BigInt total;                // T(n)
};

inline std::vector<TelephoneRow> telephone_triangle(unsigned max_n) {
    std::vector<TelephoneRow> rows;
    rows.reserve(max_n + 1);
    for (unsigned n = 0; n <= max_n; ++n) {
        TelephoneRow row;
        row.n = n;
        row.coeffs.reserve(n + 1);
        row.total = 0;
        for (unsigned s = 0; s <= n; ++s) {
            row.coeffs.push_back(telephone_coeff(n, s));
            row.total += row.coeffs.back();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// T_n^(m) = H_n^(m)(1, 1/m); m >= 2 enforced by hermite_kdf.
inline BigInt gen_telephone(unsigned n, unsigned m) {
    return to_integer(hermite_kdf(n, m, Rational(1), frac(1, m)), "gen_telephone");
}

namespace detail {

inline std::vector<unsigned> default_m_values() { return {2, 3, 4, 5, 6}; }

}  // namespace detail

// T(2n) = sum_r C(n,r)^2 r! T(n-r)^2.
inline VerificationReport verify_telephone_duplication(const VerifyOptions& opts = {}) {
    const unsigned max_n = opts.max_n.value_or(15);

    VerificationReport report;
    report.identity = to_string(IdentityTag::TelDup);
    {
        std::ostringstream os;
        os << "n = 1.." << max_n;
        report.range = os.str();
    }
    for (unsigned n = 1; n <= max_n; ++n) {
        const BigInt lhs = telephone(2 * n);
        BigInt rhs(0);
        for (unsigned r = 0; r <= n; ++r) {
            const BigInt b = binomial(n, r);
            const BigInt t = telephone(n - r);
            rhs += b * b * factorial(r) * t * t;
        }
        ++report.points;
        if (lhs != rhs) {
            ++report.failures;
            if (!report.counterexample) {
                std::ostringstream os;
                os << "n=" << n;
                report.counterexample = Counterexample{os.str(), lhs.str(), rhs.str()};
            }
        }
    }
    return report;
}

// sum_n t^n/n! T_n^(m) = e^(t + t^m / m), exact to the given order.
inline VerificationReport verify_telephone_gf(const VerifyOptions& opts = {}) {
    const auto m_values = opts.m_values.value_or(detail::default_m_values());
    const std::size_t order = opts.order.value_or(24);

    VerificationReport report;
    report.identity = to_string(IdentityTag::TelGf);
    {
        std::ostringstream os;
        os << "m in {";
        for (std::size_t i = 0; i < m_values.size(); ++i) {
            os << (i ? "," : "") << m_values[i];
        }
        os << "}, order " << order;
        report.range = os.str();
    }
    for (unsigned m : m_values) {
        Series lhs(order);
        for (std::size_t n = 0; n <= order; ++n) {
            lhs.coeff(n) = Rational(gen_telephone(static_cast<unsigned>(n), m)) *
                           recip_gamma_int(static_cast<long long>(n));
        }
        Series arg(order);
        if (order >= 1) {
            arg.coeff(1) = 1;
        }
        if (order >= m) {
            arg.coeff(m) += frac(1, m);
        }
        const Series rhs = exp(arg);
        ++report.points;
        const std::size_t top = std::min(lhs.order(), rhs.order());
        for (std::size_t i = 0; i <= top; ++i) {
            if (lhs[i] != rhs[i]) {
                ++report.failures;
                if (!report.counterexample) {
                    std::ostringstream os;
                    os << "m=" << m << ", t^" << i;
                    report.counterexample = Counterexample{os.str(), lhs[i].str(), rhs[i].str()};
                }
                break;
            }
        }
    }
    return report;
}

// T_{n+1}^(m) = T_n^(m) + n!/(n-m+1)! T_{n-m+1}^(m), the falling-factorial
// term dropped when n-m+1 < 0.
inline VerificationReport verify_telephone_recurrence(const VerifyOptions& opts = {}) {
    const auto m_values = opts.m_values.value_or(detail::default_m_values());
    const unsigned max_n = opts.max_n.value_or(40);

    VerificationReport report;
    report.identity = to_string(IdentityTag::TelRec);
    {
        std::ostringstream os;
        os << "m in {";
        for (std::size_t i = 0; i < m_values.size(); ++i) {
            os << (i ? "," : "") << m_values[i];
        }
        os << "}, n = 1.." << max_n;
        report.range = os.str();
    }
    for (unsigned m : m_values) {
        for (unsigned n = 1; n <= max_n; ++n) {
            const BigInt lhs = gen_telephone(n + 1, m);
            BigInt rhs = gen_telephone(n, m);
            if (n + 1 >= m) {
                rhs += falling_factorial(n, m - 1) * gen_telephone(n - m + 1, m);
            }
            ++report.points;
            if (lhs != rhs) {
                ++report.failures;
                if (!report.counterexample) {
                    std::ostringstream os;
                    os << "m=" << m << ", n=" << n;
                    report.counterexample = Counterexample{os.str(), lhs.str(), rhs.str()};
                }
            }
        }
    }
    return report;
}

inline VerificationReport verify_telephone_identity(IdentityTag tag, const VerifyOptions& opts = {}) {
    switch (tag) {
        case IdentityTag::TelDup:
            return verify_telephone_duplication(opts);
        case IdentityTag::TelGf:
            return verify_telephone_gf(opts);
        case IdentityTag::TelRec:
            return verify_telephone_recurrence(opts);
        default:
            throw std::invalid_argument("verify_telephone_identity: unknown tag " + to_string(tag));
    }
}

}  // namespace umbra
