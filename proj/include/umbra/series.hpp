#pragma once

// Truncated formal power series over Rational. A Series of order N holds
// the coefficients c_0..c_N of c_0 + c_1 t + ... + c_N t^N. Every
// generating-function identity in the library is checked as exact
// equality of two such series; no convergence or numerics is involved.

#include "umbra/exactnum.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace umbra {

class Series {
public:
    // Zero series of the given truncation order.
    explicit Series(std::size_t order) : coeffs_(order + 1) {}

    Series(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
        if (coeffs_.empty()) {
            coeffs_.emplace_back(0);
        }
    }

    explicit Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            coeffs_.emplace_back(0);
        }
    }

    static Series constant(Rational c, std::size_t order) {
        Series s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    // The formal variable t, truncated at `order` (>= 1).
    static Series variable(std::size_t order) {
        if (order < 1) {
            throw std::domain_error("Series::variable: order must be >= 1");
        }
        Series s(order);
        s.coeffs_[1] = 1;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Rational& operator[](std::size_t i) const {
        if (i >= coeffs_.size()) {
            throw std::out_of_range("Series: coefficient index beyond truncation order");
        }
        return coeffs_[i];
    }

    Rational& coeff(std::size_t i) {
        if (i >= coeffs_.size()) {
            throw std::out_of_range("Series: coefficient index beyond truncation order");
        }
        return coeffs_[i];
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Series truncated(std::size_t new_order) const {
        if (new_order >= order()) {
            Series s = *this;
            s.coeffs_.resize(new_order + 1);
            return s;
        }
        return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    // Mixed-order arithmetic truncates to the smaller order.
    friend Series operator+(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        }
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        }
        return r;
    }

    // Cauchy product, truncated to the smaller order.
    friend Series operator*(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (b.coeffs_[j] != 0) {
                    r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return r;
    }

    friend Series operator*(const Series& a, const Rational& c) {
        Series r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            r.coeffs_[i] = a.coeffs_[i] * c;
        }
        return r;
    }

    friend Series operator*(const Rational& c, const Series& a) { return a * c; }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

// exp of a series with zero constant term, computed through the exact
// recurrence k b_k = sum_{j=1}^{k} j a_j b_{k-j} (from b' = a' b).
inline Series exp(const Series& a) {
    if (a[0] != 0) {
        throw std::domain_error("exp: series must have zero constant term");
    }
    const std::size_t n = a.order();
    Series b(n);
    b.coeff(0) = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j] != 0) {
                acc += Rational(j) * a[j] * b[k - j];
            }
        }
        b.coeff(k) = acc / Rational(k);
    }
    return b;
}

// Substitutes the argument u -> c t^m, i.e. returns a(c t^m) truncated at
// the order of a. Requires m >= 1.
inline Series inflate(const Series& a, unsigned m, const Rational& c) {
    if (m < 1) {
        throw std::domain_error("inflate: substitution power m must be >= 1");
    }
    const std::size_t n = a.order();
    Series b(n);
    Rational cp(1);
    for (std::size_t r = 0; static_cast<std::size_t>(m) * r <= n; ++r) {
        b.coeff(m * r) = a[r] * cp;
        cp *= c;
    }
    return b;
}

// The Bessel-Tricomi series: coefficient 1/(r! (q+r)!) at degree r of the
// argument, for r = 0..order.
inline Series cq_series(unsigned q, std::size_t order) {
    Series s(order);
    for (std::size_t r = 0; r <= order; ++r) {
        s.coeff(r) = frac(1, factorial(static_cast<unsigned>(r)) * factorial(q + static_cast<unsigned>(r)));
    }
    return s;
}

// EGF-normalized coefficient n! c_n.
inline Rational egf_coeff(const Series& a, std::size_t n) {
    if (n > a.order()) {
        throw std::out_of_range("egf_coeff: index beyond truncation order");
    }
    return Rational(factorial(static_cast<unsigned>(n))) * a[n];
}

// Horner evaluation of the truncated polynomial at a rational point.
inline Rational evaluate(const Series& a, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = a.order() + 1; i-- > 0;) {
        acc = acc * x + a[i];
    }
    return acc;
}

}  // namespace umbra
