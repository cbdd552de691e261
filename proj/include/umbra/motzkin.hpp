#pragma once

// Motzkin numbers, their coefficient triangle, the hybrid polynomials
// P_n^(q)(x,y) they stem from, and the associated Motzkin families
// m_n^(q), together with exact verification of their identities:
//
//   P_n^(q)(x,y)   = n! sum_{r=0}^{floor(n/2)} x^(n-2r) y^r / ((n-2r)! r! (r+q)!)
//   m_n            = P_n^(1)(1,1) = sum_s C(n,s) f_s,   f_{2k} = Catalan(k), f odd = 0
//   m_n^(q)        = P_n^(q)(1,1)            (rational in general)
//   mt_n^(q)       = (n+q)!/n! * m_n^(q)     (always an integer)

#include "umbra/exactnum.hpp"
#include "umbra/report.hpp"
#include "umbra/series.hpp"
#include "umbra/triangle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace umbra {

// f_s: Catalan(s/2) for even s, 0 for odd s.
inline BigInt motzkin_kernel(unsigned s) {
    if (s % 2 != 0) {
        return BigInt(0);
    }
    return catalan(s / 2);
}

inline Rational hybrid_poly(unsigned n, unsigned q, const Rational& x, const Rational& y) {
    const BigInt nf = factorial(n);
    Rational acc(0);
    for (unsigned r = 0; 2 * r <= n; ++r) {
        Rational term = frac(nf, factorial(n - 2 * r) * factorial(r) * factorial(r + q));
        term *= pow_rational(x, n - 2 * r);
        term *= pow_rational(y, r);
        acc += term;
    }
    return acc;
}

// Triangle entry m_{n,s} = C(n,s) f_s; requires s <= n.
inline BigInt motzkin_coeff(unsigned n, unsigned s) {
    if (s > n) {
        throw std::out_of_range("motzkin_coeff: column s exceeds row n");
    }
    return binomial(n, static_cast<long long>(s)) * motzkin_kernel(s);
}

inline BigInt motzkin(unsigned n) {
    BigInt acc(0);
    for (unsigned k = 0; 2 * k <= n; ++k) {
        acc += binomial(n, 2 * static_cast<long long>(k)) * catalan(k);
    }
    return acc;
}

inline Triangle motzkin_triangle(unsigned max_n) {
    Triangle t;
    t.rows.reserve(max_n + 1);
    t.row_sums.reserve(max_n + 1);
    for (unsigned n = 0; n <= max_n; ++n) {
        std::vector<BigInt> row;
        row.reserve(n + 1);
        BigInt sum(0);
        for (unsigned s = 0; s <= n; ++s) {
            row.push_back(motzkin_coeff(n, s));
            sum += row.back();
        }
        t.rows.push_back(std::move(row));
        t.row_sums.push_back(std::move(sum));
    }
    return t;
}

inline Rational assoc_motzkin(unsigned n, unsigned q) { return hybrid_poly(n, q, Rational(1), Rational(1)); }

inline BigInt tilde_motzkin(unsigned n, unsigned q) {
    const Rational scale(factorial(n + q) / factorial(n));  // exact: (n+q)!/n! is integral
    return to_integer(scale * assoc_motzkin(n, q), "tilde_motzkin");
}

// Right-hand side of the index-duplication formula for m_{2n}:
//   sum_r C(n,r)^2 2^r r! (n-r)! sum_s m_{n-r}^(r+s+1) / ((n-r-2s)! s!)
inline Rational motzkin_duplication_rhs(unsigned n) {
    Rational acc(0);
    for (unsigned r = 0; r <= n; ++r) {
        const BigInt b = binomial(n, r);
        const BigInt outer = b * b * pow(BigInt(2), r) * factorial(r) * factorial(n - r);
        Rational inner(0);
        for (unsigned s = 0; 2 * s <= n - r; ++s) {
            inner += assoc_motzkin(n - r, r + s + 1) * frac(1, factorial(n - r - 2 * s) * factorial(s));
        }
        acc += Rational(outer) * inner;
    }
    return acc;
}

// M_{p,n,t} = p! sum_r m_n^(t+r+1) / ((p-2r)! r!)
inline Rational motzkin_addition_kernel(unsigned p, unsigned n, unsigned t) {
    const BigInt pf = factorial(p);
    Rational acc(0);
    for (unsigned r = 0; 2 * r <= p; ++r) {
        acc += assoc_motzkin(n, t + r + 1) * frac(pf, factorial(p - 2 * r) * factorial(r));
    }
    return acc;
}

// Right-hand side of the addition formula for m_{n+p}:
//   sum_s 2^s s! C(p,s) C(n,s) M_{p-s,n-s,s}
// The upper limit min(n,p) is automatic: the binomials vanish past it.
inline Rational motzkin_addition_rhs(unsigned n, unsigned p) {
    Rational acc(0);
    for (unsigned s = 0; s <= std::max(n, p); ++s) {
        const BigInt c = binomial(p, s) * binomial(n, s);
        if (c == 0) {
            continue;
        }
        const BigInt w = pow(BigInt(2), s) * factorial(s) * c;
        acc += Rational(w) * motzkin_addition_kernel(p - s, n - s, s);
    }
    return acc;
}

namespace detail {

inline std::vector<std::pair<Rational, Rational>> default_hybrid_grid() {
    return {{Rational(1), Rational(1)}, {Rational(1), frac(1, 2)}, {Rational(2), frac(1, 3)}};
}

// I_{s+r+1}(2t)/t^(r+1) as a rational power series:
//   sum_k t^(2k+s) / (k! (k+s+r+1)!)
inline Series bessel_quotient(unsigned r, unsigned s, std::size_t order) {
    Series b(order);
    for (unsigned k = 0; 2 * k + s <= order; ++k) {
        b.coeff(2 * k + s) = frac(1, factorial(k) * factorial(k + s + r + 1));
    }
    return b;
}

inline std::optional<std::size_t> first_mismatch(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] != b[i]) {
            return i;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// mu_l(t) = l! sum_{r=0}^{floor(l/2)} (1/r!) sum_{s=0}^{l-2r}
//           2^s / (s! (l-2r-s)!) * I_{s+r+1}(2t)/t^(r+1);
// the EGF of the shifted sequence n -> m_{n+l} divided by e^t.
inline Series motzkin_mu_series(unsigned l, std::size_t order) {
    Series mu(order);
    const BigInt lf = factorial(l);
    for (unsigned r = 0; 2 * r <= l; ++r) {
        for (unsigned s = 0; s <= l - 2 * r; ++s) {
            const Rational c = frac(lf * pow(BigInt(2), s), factorial(r) * factorial(s) * factorial(l - 2 * r - s));
            mu = mu + detail::bessel_quotient(r, s, order) * c;
        }
    }
    return mu;
}

// sum_n t^n/n! P_n^(q)(x,y) = C_q(y t^2) e^(xt), exact to the given order.
inline VerificationReport verify_hybrid_gf(const VerifyOptions& opts = {}) {
    const unsigned max_q = opts.max_q.value_or(3);
    const std::size_t order = opts.order.value_or(24);
    const auto grid = opts.grid.value_or(detail::default_hybrid_grid());

    VerificationReport report;
    report.identity = to_string(IdentityTag::GfHybrid);
    {
        std::ostringstream os;
        os << "q = 0.." << max_q << ", " << grid.size() << " (x,y) points, order " << order;
        report.range = os.str();
    }
    for (unsigned q = 0; q <= max_q; ++q) {
        for (const auto& [x, y] : grid) {
            Series lhs(order);
            for (std::size_t n = 0; n <= order; ++n) {
                lhs.coeff(n) =
                    hybrid_poly(static_cast<unsigned>(n), q, x, y) * recip_gamma_int(static_cast<long long>(n));
            }
            Series xt(order);
            if (order >= 1) {
                xt.coeff(1) = x;
            }
            const Series rhs = inflate(cq_series(q, order), 2, y) * exp(xt);
            ++report.points;
            if (auto k = detail::first_mismatch(lhs, rhs)) {
                ++report.failures;
                if (!report.counterexample) {
                    std::ostringstream os;
                    os << "q=" << q << ", x=" << x << ", y=" << y << ", t^" << *k;
                    report.counterexample = Counterexample{os.str(), lhs[*k].str(), rhs[*k].str()};
                }
            }
        }
    }
    return report;
}

// sum_n t^n/n! m_n = C_1(t^2) e^t, exact to the given order.
inline VerificationReport verify_motzkin_gf(const VerifyOptions& opts = {}) {
    const std::size_t order = opts.order.value_or(30);

    VerificationReport report;
    report.identity = to_string(IdentityTag::GfMotzkin);
    {
        std::ostringstream os;
        os << "order " << order;
        report.range = os.str();
    }
    Series lhs(order);
    for (std::size_t n = 0; n <= order; ++n) {
        lhs.coeff(n) = Rational(motzkin(static_cast<unsigned>(n))) * recip_gamma_int(static_cast<long long>(n));
    }
    Series t(order);
    if (order >= 1) {
        t.coeff(1) = 1;
    }
    const Series rhs = inflate(cq_series(1, order), 2, Rational(1)) * exp(t);
    ++report.points;
    if (auto k = detail::first_mismatch(lhs, rhs)) {
        ++report.failures;
        std::ostringstream os;
        os << "t^" << *k;
        report.counterexample = Counterexample{os.str(), lhs[*k].str(), rhs[*k].str()};
    }
    return report;
}

// sum_n t^n/n! m_{n+l} = mu_l(t) e^t, exact to the given order.
inline VerificationReport verify_motzkin_shift_gf(const VerifyOptions& opts = {}) {
    const unsigned max_l = opts.max_l.value_or(6);
    const std::size_t order = opts.order.value_or(24);

    VerificationReport report;
    report.identity = to_string(IdentityTag::GfMotzkinShift);
    {
        std::ostringstream os;
        os << "l = 0.." << max_l << ", order " << order;
        report.range = os.str();
    }
    Series et(order);
    if (order >= 1) {
        et.coeff(1) = 1;
    }
    et = exp(et);
    for (unsigned l = 0; l <= max_l; ++l) {
        Series lhs(order);
        for (std::size_t n = 0; n <= order; ++n) {
            lhs.coeff(n) =
                Rational(motzkin(static_cast<unsigned>(n) + l)) * recip_gamma_int(static_cast<long long>(n));
        }
        const Series rhs = motzkin_mu_series(l, order) * et;
        ++report.points;
        if (auto k = detail::first_mismatch(lhs, rhs)) {
            ++report.failures;
            if (!report.counterexample) {
                std::ostringstream os;
                os << "l=" << l << ", t^" << *k;
                report.counterexample = Counterexample{os.str(), lhs[*k].str(), rhs[*k].str()};
            }
        }
    }
    return report;
}

// m_{2n} against the associated-Motzkin double sum.
inline VerificationReport verify_motzkin_duplication(const VerifyOptions& opts = {}) {
    const unsigned max_n = opts.max_n.value_or(12);

    VerificationReport report;
    report.identity = to_string(IdentityTag::MotzkinDup);
    {
        std::ostringstream os;
        os << "n = 1.." << max_n;
        report.range = os.str();
    }
    for (unsigned n = 1; n <= max_n; ++n) {
        const Rational lhs(motzkin(2 * n));
        const Rational rhs = motzkin_duplication_rhs(n);
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

// m_{n+1}^(q) = m_n^(q) + 2n m_{n-1}^(q+1).
inline VerificationReport verify_assoc_recurrence(const VerifyOptions& opts = {}) {
    const unsigned max_n = opts.max_n.value_or(40);
    const unsigned max_q = opts.max_q.value_or(5);

    VerificationReport report;
    report.identity = to_string(IdentityTag::AssocRec);
    {
        std::ostringstream os;
        os << "n = 1.." << max_n << ", q = 1.." << max_q;
        report.range = os.str();
    }
    for (unsigned q = 1; q <= max_q; ++q) {
        for (unsigned n = 1; n <= max_n; ++n) {
            const Rational lhs = assoc_motzkin(n + 1, q);
            const Rational rhs = assoc_motzkin(n, q) + Rational(2 * n) * assoc_motzkin(n - 1, q + 1);
            ++report.points;
            if (lhs != rhs) {
                ++report.failures;
                if (!report.counterexample) {
                    std::ostringstream os;
                    os << "n=" << n << ", q=" << q;
                    report.counterexample = Counterexample{os.str(), lhs.str(), rhs.str()};
                }
            }
        }
    }
    return report;
}

// m_{n+p} against the Nielsen-style addition formula.
inline VerificationReport verify_motzkin_addition(const VerifyOptions& opts = {}) {
    const unsigned max_n = opts.max_n.value_or(10);
    const unsigned max_p = opts.max_p.value_or(10);

    VerificationReport report;
    report.identity = to_string(IdentityTag::MotzkinAdd);
    {
        std::ostringstream os;
        os << "n = 1.." << max_n << ", p = 1.." << max_p;
        report.range = os.str();
    }
    for (unsigned n = 1; n <= max_n; ++n) {
        for (unsigned p = 1; p <= max_p; ++p) {
            const Rational lhs(motzkin(n + p));
            const Rational rhs = motzkin_addition_rhs(n, p);
            ++report.points;
            if (lhs != rhs) {
                ++report.failures;
                if (!report.counterexample) {
                    std::ostringstream os;
                    os << "n=" << n << ", p=" << p;
                    report.counterexample = Counterexample{os.str(), lhs.str(), rhs.str()};
                }
            }
        }
    }
    return report;
}

// sum_{s=0}^n m_{n-s} m_s = 2(n+1) m_n^(2).
inline VerificationReport verify_motzkin_convolution(const VerifyOptions& opts = {}) {
    const unsigned max_n = opts.max_n.value_or(40);

    VerificationReport report;
    report.identity = to_string(IdentityTag::MotzkinConv);
    {
        std::ostringstream os;
        os << "n = 1.." << max_n;
        report.range = os.str();
    }
    std::vector<BigInt> m;
    m.reserve(max_n + 1);
    for (unsigned n = 0; n <= max_n; ++n) {
        m.push_back(motzkin(n));
    }
    for (unsigned n = 1; n <= max_n; ++n) {
        BigInt conv(0);
        for (unsigned s = 0; s <= n; ++s) {
            conv += m[n - s] * m[s];
        }
        const Rational lhs(conv);
        const Rational rhs = Rational(2 * (n + 1)) * assoc_motzkin(n, 2);
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

inline VerificationReport verify_motzkin_identity(IdentityTag tag, const VerifyOptions& opts = {}) {
    switch (tag) {
        case IdentityTag::GfHybrid:
            return verify_hybrid_gf(opts);
        case IdentityTag::GfMotzkin:
            return verify_motzkin_gf(opts);
        case IdentityTag::GfMotzkinShift:
            return verify_motzkin_shift_gf(opts);
        case IdentityTag::MotzkinDup:
            return verify_motzkin_duplication(opts);
        case IdentityTag::AssocRec:
            return verify_assoc_recurrence(opts);
        case IdentityTag::MotzkinAdd:
            return verify_motzkin_addition(opts);
        case IdentityTag::MotzkinConv:
            return verify_motzkin_convolution(opts);
        default:
            throw std::invalid_argument("verify_motzkin_identity: unknown tag " + to_string(tag));
    }
}

}  // namespace umbra
