#pragma once

// The umbral operator algebra: finite linear combinations of integer
// powers of the formal symbol c-hat. Composition adds exponents
// (bilinearly), and evaluation sends an exponent k to 1/Gamma(k+1) --
// 1/k! for k >= 0 and exactly 0 for negative integers. Exponents are
// restricted to integers on purpose: every identity handled here uses
// integer powers only, and the restriction keeps the algebra exact.

#include "umbra/exactnum.hpp"

#include <map>
#include <sstream>
#include <string>

namespace umbra {

class UmbralPoly {
public:
    UmbralPoly() = default;

    static UmbralPoly monomial(long exponent, Rational coeff = Rational(1)) {
        UmbralPoly p;
        p.add_term(exponent, coeff);
        return p;
    }

    static UmbralPoly one() { return monomial(0); }

    // Accumulates a term, keeping the zero-coefficient-free canonical form.
    void add_term(long exponent, const Rational& coeff) {
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(exponent, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    const std::map<long, Rational>& terms() const { return terms_; }

    bool operator==(const UmbralPoly&) const = default;

    friend UmbralPoly operator+(const UmbralPoly& a, const UmbralPoly& b) {
        UmbralPoly r = a;
        for (const auto& [e, c] : b.terms_) {
            r.add_term(e, c);
        }
        return r;
    }

    friend UmbralPoly operator*(const UmbralPoly& a, const Rational& c) {
        UmbralPoly r;
        if (c == 0) {
            return r;
        }
        for (const auto& [e, coeff] : a.terms_) {
            r.terms_.emplace(e, coeff * c);
        }
        return r;
    }

    friend UmbralPoly operator*(const Rational& c, const UmbralPoly& a) { return a * c; }

    std::string str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) {
                os << " + ";
            }
            os << c << "*c^" << e;
            first = false;
        }
        return os.str();
    }

private:
    std::map<long, Rational> terms_;  // exponent -> coefficient, no zeros stored
};

// Bilinear extension of c^mu o c^nu = c^(mu+nu).
inline UmbralPoly umbral_compose(const UmbralPoly& a, const UmbralPoly& b) {
    UmbralPoly r;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

// Sends every c^k to 1/Gamma(k+1) and sums.
inline Rational umbral_eval(const UmbralPoly& a) {
    Rational acc(0);
    for (const auto& [e, c] : a.terms()) {
        acc += c * recip_gamma_int(e);
    }
    return acc;
}

// H_n(x, c-hat): the two-variable Hermite polynomial with its second
// argument replaced by the umbral symbol, i.e.
// sum_r n!/((n-2r)! r!) x^(n-2r) c^r.
inline UmbralPoly umbral_hermite(unsigned n, const Rational& x) {
    UmbralPoly p;
    const BigInt nf = factorial(n);
    for (unsigned r = 0; 2 * r <= n; ++r) {
        Rational coeff = frac(nf, factorial(n - 2 * r) * factorial(r));
        p.add_term(static_cast<long>(r), coeff * pow_rational(x, n - 2 * r));
    }
    return p;
}

}  // namespace umbra
