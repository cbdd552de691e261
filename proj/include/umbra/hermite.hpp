#pragma once

// Two-variable Hermite polynomials of arbitrary order m >= 2:
//
//   H_n^(m)(x,y) = n! sum_{r=0}^{floor(n/m)} x^(n-mr) y^r / ((n-mr)! r!)
//
// evaluated exactly at rational arguments, together with the checks of
// their shifted generating function and index-duplication identities.

#include "umbra/exactnum.hpp"
#include "umbra/report.hpp"
#include "umbra/series.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace umbra {

inline Rational hermite_kdf(unsigned n, unsigned m_order, const Rational& x, const Rational& y) {
    if (m_order < 2) {
        throw std::domain_error("hermite_kdf: order m must be >= 2");
    }
    const BigInt nf = factorial(n);
    Rational acc(0);
    for (unsigned r = 0; m_order * r <= n; ++r) {
        Rational term = frac(nf, factorial(n - m_order * r) * factorial(r));
        term *= pow_rational(x, n - m_order * r);
        term *= pow_rational(y, r);
        acc += term;
    }
    return acc;
}

// Classical m=2 case.
inline Rational hermite2(unsigned n, const Rational& x, const Rational& y) {
    return hermite_kdf(n, 2, x, y);
}

// H_l(x + 2yt, y) expanded as a polynomial in t of degree l, via binomial
// expansion of (x + 2yt)^(l-2j). Returned as a Series of the given order.
inline Series hermite_shift_polynomial(unsigned l, const Rational& x, const Rational& y, std::size_t order) {
    Series out(order);
    const BigInt lf = factorial(l);
    const Rational two_y = Rational(2) * y;
    for (unsigned j = 0; 2 * j <= l; ++j) {
        const unsigned d = l - 2 * j;  // degree of the (x + 2yt)^d factor
        const Rational base = frac(lf, factorial(d) * factorial(j)) * pow_rational(y, j);
        for (unsigned i = 0; i <= d && i <= order; ++i) {
            Rational c = base * Rational(binomial(d, i));
            c *= pow_rational(x, d - i);
            c *= pow_rational(two_y, i);
            out.coeff(i) += c;
        }
    }
    return out;
}

namespace detail {

inline std::string rational_pair(const Rational& x, const Rational& y) {
    std::ostringstream os;
    os << "x=" << x << ", y=" << y;
    return os.str();
}

// Compares two series and reports the first differing degree, if any.
inline std::optional<std::size_t> first_series_mismatch(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] != b[i]) {
            return i;
        }
    }
    return std::nullopt;
}

inline std::vector<std::pair<Rational, Rational>> default_xy_grid() {
    return {{Rational(1), Rational(1)}, {Rational(1), frac(1, 2)}, {Rational(2), frac(1, 3)}};
}

inline std::vector<std::pair<Rational, Rational>> default_dup_grid() {
    std::vector<std::pair<Rational, Rational>> g;
    const Rational xs[] = {Rational(1), frac(1, 2), Rational(2), Rational(-1)};
    const Rational ys[] = {Rational(1), frac(1, 2), frac(1, 3), Rational(-2)};
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            g.emplace_back(x, y);
        }
    }
    return g;
}

}  // namespace detail

// sum_n t^n/n! H_{n+l}(x,y) = H_l(x+2yt, y) e^(xt + yt^2), as exact series
// equality; checked per (l, x, y) point.
inline VerificationReport verify_hermite_shift_gf(const VerifyOptions& opts = {}) {
    const unsigned max_l = opts.max_l.value_or(4);
    const std::size_t order = opts.order.value_or(24);
    const auto grid = opts.grid.value_or(detail::default_xy_grid());

    VerificationReport report;
    report.identity = to_string(IdentityTag::GfHermiteShift);
    {
        std::ostringstream os;
        os << "l = 0.." << max_l << ", " << grid.size() << " (x,y) points, order " << order;
        report.range = os.str();
    }
    for (unsigned l = 0; l <= max_l; ++l) {
        for (const auto& [x, y] : grid) {
            Series lhs(order);
            for (std::size_t n = 0; n <= order; ++n) {
                lhs.coeff(n) =
                    hermite2(static_cast<unsigned>(n) + l, x, y) * recip_gamma_int(static_cast<long long>(n));
            }
            Series arg(order);
            if (order >= 1) {
                arg.coeff(1) = x;
            }
            if (order >= 2) {
                arg.coeff(2) = y;
            }
            const Series rhs = hermite_shift_polynomial(l, x, y, order) * exp(arg);
            ++report.points;
            if (auto k = detail::first_series_mismatch(lhs, rhs)) {
                ++report.failures;
                if (!report.counterexample) {
                    std::ostringstream os;
                    os << "l=" << l << ", " << detail::rational_pair(x, y) << ", t^" << *k;
                    report.counterexample = Counterexample{os.str(), lhs[*k].str(), rhs[*k].str()};
                }
            }
        }
    }
    return report;
}

// H_{2n}(x,y) = sum_r C(n,r)^2 r! (2y)^r (H_{n-r}(x,y))^2, checked
// pointwise on a rational grid.
inline VerificationReport verify_hermite_duplication(const VerifyOptions& opts = {}) {
    const unsigned max_n = opts.max_n.value_or(12);
    const auto grid = opts.grid.value_or(detail::default_dup_grid());

    VerificationReport report;
    report.identity = to_string(IdentityTag::HermiteDup);
    {
        std::ostringstream os;
        os << "n = 0.." << max_n << ", " << grid.size() << " (x,y) points";
        report.range = os.str();
    }
    for (unsigned n = 0; n <= max_n; ++n) {
        for (const auto& [x, y] : grid) {
            const Rational lhs = hermite2(2 * n, x, y);
            Rational rhs(0);
            const Rational two_y = Rational(2) * y;
            for (unsigned r = 0; r <= n; ++r) {
                const BigInt b = binomial(n, r);
                Rational term = Rational(b * b * factorial(r)) * pow_rational(two_y, r);
                const Rational h = hermite2(n - r, x, y);
                rhs += term * h * h;
            }
            ++report.points;
            if (lhs != rhs) {
                ++report.failures;
                if (!report.counterexample) {
                    std::ostringstream os;
                    os << "n=" << n << ", " << detail::rational_pair(x, y);
                    report.counterexample = Counterexample{os.str(), lhs.str(), rhs.str()};
                }
            }
        }
    }
    return report;
}

inline VerificationReport verify_hermite_identity(IdentityTag tag, const VerifyOptions& opts = {}) {
    switch (tag) {
        case IdentityTag::GfHermiteShift:
            return verify_hermite_shift_gf(opts);
        case IdentityTag::HermiteDup:
            return verify_hermite_duplication(opts);
        default:
            throw std::invalid_argument("verify_hermite_identity: unknown tag " + to_string(tag));
    }
}

}  // namespace umbra
