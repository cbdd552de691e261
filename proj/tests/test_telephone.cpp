#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "umbra/exactnum.hpp"
#include "umbra/hermite.hpp"
#include "umbra/report.hpp"
#include "umbra/telephone.hpp"

using umbra::BigInt;
using umbra::Rational;

TEST_CASE("hermite numbers", "[telephone]") {
    // h_s(y): 0 at odd s, y^k (2k)!/k! at s = 2k.
    CHECK(umbra::hermite_number(0, umbra::frac(1, 2)) == Rational(1));
    CHECK(umbra::hermite_number(1, umbra::frac(1, 2)) == Rational(0));
    CHECK(umbra::hermite_number(2, umbra::frac(1, 2)) == Rational(1));
    CHECK(umbra::hermite_number(4, umbra::frac(1, 2)) == Rational(3));
    CHECK(umbra::hermite_number(5, umbra::frac(1, 2)) == Rational(0));
    CHECK(umbra::hermite_number(6, umbra::frac(1, 2)) == Rational(15));
    CHECK(umbra::hermite_number(8, umbra::frac(1, 2)) == Rational(105));

    // At general y they agree with H_s(0, y) computed the long way.
    const Rational ys[] = {Rational(1), umbra::frac(1, 3), Rational(-2), umbra::frac(5, 7)};
    for (const Rational& y : ys) {
        for (unsigned s = 0; s <= 30; ++s) {
            CHECK(umbra::hermite_number(s, y) == umbra::hermite2(s, Rational(0), y));
        }
    }
}

TEST_CASE("telephone numbers", "[telephone]") {
    const long long expected[] = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(umbra::telephone(n) == expected[n]);
    }
    CHECK(umbra::telephone(20) == BigInt("23758664096"));
}

TEST_CASE("telephone expansion coefficients", "[telephone]") {
    // Row 7: 1 0 21 0 105 0 105 0, total 232.
    const long long row7[] = {1, 0, 21, 0, 105, 0, 105, 0};
    for (unsigned s = 0; s <= 7; ++s) {
        CHECK(umbra::telephone_coeff(7, s) == row7[s]);
    }
    CHECK_THROWS_AS(umbra::telephone_coeff(3, 4), std::out_of_range);

    // Coefficients resum to the telephone numbers.
    for (unsigned n = 0; n <= 60; ++n) {
        BigInt sum = 0;
        for (unsigned s = 0; s <= n; ++s) sum += umbra::telephone_coeff(n, s);
        CHECK(sum == umbra::telephone(n));
    }
}

TEST_CASE("telephone triangle", "[telephone]") {
    auto rows = umbra::telephone_triangle(6);
    REQUIRE(rows.size() == 7);

    const std::vector<std::vector<long long>> expected = {
        {1},
        {1, 0},
        {1, 0, 1},
        {1, 0, 3, 0},
        {1, 0, 6, 0, 3},
        {1, 0, 10, 0, 15, 0},
        {1, 0, 15, 0, 45, 0, 15},
    };
    const long long totals[] = {1, 1, 2, 4, 10, 26, 76};
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(rows[n].n == n);
        REQUIRE(rows[n].coeffs.size() == n + 1);
        for (unsigned s = 0; s <= n; ++s) {
            CHECK(rows[n].coeffs[s] == expected[n][s]);
        }
        CHECK(rows[n].total == totals[n]);
    }
}

TEST_CASE("generalized telephone numbers", "[telephone]") {
    // m = 3: involution-like counts with cycle length 3 allowed.
    const long long m3[] = {1, 1, 1, 3, 9, 21, 81, 351, 1233};
    for (unsigned n = 0; n < 9; ++n) {
        CHECK(umbra::gen_telephone(n, 3) == m3[n]);
    }
    // m = 4.
    const long long m4[] = {1, 1, 1, 1, 7, 31, 91, 211, 1681};
    for (unsigned n = 0; n < 9; ++n) {
        CHECK(umbra::gen_telephone(n, 4) == m4[n]);
    }
    // m = 2 reduces to the classical sequence.
    for (unsigned n = 0; n <= 40; ++n) {
        CHECK(umbra::gen_telephone(n, 2) == umbra::telephone(n));
    }
    CHECK_THROWS_AS(umbra::gen_telephone(4, 1), std::domain_error);
}

TEST_CASE("index duplication identity verifies", "[telephone][identity]") {
    umbra::VerificationReport r = umbra::verify_telephone_duplication();
    INFO(r.range);
    CHECK(r.passed());
    CHECK(r.points == 15);

    umbra::VerifyOptions opts;
    opts.max_n = 30;
    CHECK(umbra::verify_telephone_duplication(opts).passed());

    // Direct spot check at n = 3: T(6) = sum_r C(3,r)^2 r! T(3-r)^2.
    BigInt rhs = 0;
    for (unsigned r = 0; r <= 3; ++r) {
        BigInt b = umbra::binomial(3, r);
        BigInt t = umbra::telephone(3 - r);
        rhs += b * b * umbra::factorial(r) * t * t;
    }
    CHECK(rhs == umbra::telephone(6));
}

TEST_CASE("exponential generating function verifies", "[telephone][identity]") {
    umbra::VerificationReport r = umbra::verify_telephone_gf();
    INFO(r.range);
    CHECK(r.passed());
    CHECK(r.points == 5);

    umbra::VerifyOptions opts;
    opts.m_values = {2, 7, 10};
    opts.order = 30;
    CHECK(umbra::verify_telephone_gf(opts).passed());
}

TEST_CASE("recurrence verifies", "[telephone][identity]") {
    umbra::VerificationReport r = umbra::verify_telephone_recurrence();
    INFO(r.range);
    CHECK(r.passed());
    CHECK(r.points == 200);

    // Spot check the classical case: T(n+1) = T(n) + n T(n-1).
    for (unsigned n = 1; n <= 30; ++n) {
        CHECK(umbra::telephone(n + 1) == umbra::telephone(n) + n * umbra::telephone(n - 1));
    }
}

TEST_CASE("identity dispatcher routes telephone tags", "[telephone]") {
    using umbra::IdentityTag;
    CHECK(umbra::verify_telephone_identity(IdentityTag::TelDup).passed());
    CHECK(umbra::verify_telephone_identity(IdentityTag::TelGf).passed());
    CHECK(umbra::verify_telephone_identity(IdentityTag::TelRec).passed());
}
