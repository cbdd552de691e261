#pragma once

// Exact integer and rational arithmetic plus the small combinatorial
// kernels (factorials, binomials, Catalan numbers, reciprocal Gamma at
// integer arguments) the rest of the library is built from. Everything
// here is pure and allocation-only; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace umbra {

using BigInt = boost::multiprecision::cpp_int;

// Canonical arbitrary-precision fraction: denominator > 0 and
// gcd(|num|, den) == 1 are maintained by every operation.
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den with the sign normalized onto the numerator. The
// underlying two-argument constructor rejects negative denominators.
inline Rational frac(BigInt num, BigInt den) {
    if (den == 0) {
        throw std::domain_error("frac: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

// C(n,k), with the convention that arguments outside 0 <= k <= n give 0.
// Summation bounds like min(n,p) in the addition formulas then take care
// of themselves.
inline BigInt binomial(unsigned n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) {
        return 0;
    }
    auto kk = static_cast<unsigned>(k);
    if (kk > n - kk) {
        kk = n - kk;
    }
    BigInt result = 1;
    for (unsigned i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i;  // each partial product is C(n-kk+i, i), so this is exact
    }
    return result;
}

inline BigInt catalan(unsigned k) {
    BigInt c = binomial(2 * k, k);
    c /= k + 1;
    return c;
}

// 1/Gamma(k+1) at integer k: 1/k! for k >= 0, exactly 0 for k <= -1
// (the reciprocal Gamma function vanishes at the poles of Gamma).
inline Rational recip_gamma_int(long long k) {
    if (k < 0) {
        return Rational(0);
    }
    return frac(1, factorial(static_cast<unsigned>(k)));
}

// n(n-1)...(n-k+1), k factors. Hits zero once k exceeds n, which is the
// behaviour recurrence terms with out-of-range shifts rely on.
inline BigInt falling_factorial(unsigned n, unsigned k) {
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (i > n) {
            return 0;
        }
        result *= n - i;
    }
    return result;
}

inline Rational pow_rational(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1U) {
            result *= b;
        }
        b *= b;
        e >>= 1U;
    }
    return result;
}

inline bool is_integral(const Rational& r) {
    return denominator(r) == 1;
}

// Narrows an integral Rational to BigInt; callers use this where a value
// is provably an integer and a fractional result would be a bug.
inline BigInt to_integer(const Rational& r, const char* context) {
    if (!is_integral(r)) {
        throw std::logic_error(std::string(context) + ": expected integral value, got " + r.str());
    }
    return numerator(r);
}

}  // namespace umbra
