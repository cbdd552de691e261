#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>
#include <stdexcept>

#include "umbra/exactnum.hpp"

using umbra::BigInt;
using umbra::Rational;

TEST_CASE("frac builds canonical rationals", "[exactnum]") {
    CHECK(umbra::frac(1, 2) == umbra::frac(2, 4));
    CHECK(umbra::frac(-1, 2) == umbra::frac(1, -2));
    CHECK(umbra::frac(0, 7) == Rational(0));
    CHECK(umbra::frac(6, 3) == Rational(2));
    CHECK_THROWS_AS(umbra::frac(1, 0), std::domain_error);
}

TEST_CASE("rational stream format", "[exactnum]") {
    auto str = [](const Rational& r) {
        std::ostringstream os;
        os << r;
        return os.str();
    };
    CHECK(str(umbra::frac(1, 2)) == "1/2");
    CHECK(str(umbra::frac(-3, 4)) == "-3/4");
    CHECK(str(Rational(5)) == "5");
    CHECK(str(Rational(0)) == "0");
}

TEST_CASE("factorial values", "[exactnum]") {
    CHECK(umbra::factorial(0) == 1);
    CHECK(umbra::factorial(1) == 1);
    CHECK(umbra::factorial(5) == 120);
    CHECK(umbra::factorial(20) == BigInt("2432902008176640000"));
    // 30! has 33 digits; exactness matters here.
    CHECK(umbra::factorial(30) == BigInt("265252859812191058636308480000000"));
}

TEST_CASE("binomial values and edge cases", "[exactnum]") {
    CHECK(umbra::binomial(0, 0) == 1);
    CHECK(umbra::binomial(5, 2) == 10);
    CHECK(umbra::binomial(10, 10) == 1);
    CHECK(umbra::binomial(10, 11) == 0);
    CHECK(umbra::binomial(10, -1) == 0);
    CHECK(umbra::binomial(52, 5) == BigInt("2598960"));
    CHECK(umbra::binomial(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("binomial satisfies the Pascal recurrence", "[exactnum][property]") {
    for (long long n = 1; n <= 64; ++n) {
        for (long long k = 0; k <= n; ++k) {
            CHECK(umbra::binomial(n, k) ==
                  umbra::binomial(n - 1, k - 1) + umbra::binomial(n - 1, k));
        }
    }
}

TEST_CASE("catalan values", "[exactnum]") {
    const long long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (long long k = 0; k < 10; ++k) {
        CHECK(umbra::catalan(k) == expected[k]);
    }
    // C(k) = binomial(2k, k) / (k + 1) must hold exactly.
    for (unsigned k = 0; k <= 40; ++k) {
        CHECK(umbra::catalan(k) * (k + 1) == umbra::binomial(2 * k, k));
    }
}

TEST_CASE("recip_gamma_int", "[exactnum]") {
    CHECK(umbra::recip_gamma_int(0) == Rational(1));
    CHECK(umbra::recip_gamma_int(3) == umbra::frac(1, 6));
    CHECK(umbra::recip_gamma_int(-1) == Rational(0));
    CHECK(umbra::recip_gamma_int(-5) == Rational(0));
}

TEST_CASE("falling factorial", "[exactnum]") {
    CHECK(umbra::falling_factorial(5, 0) == 1);
    CHECK(umbra::falling_factorial(5, 2) == 20);
    CHECK(umbra::falling_factorial(5, 5) == 120);
    CHECK(umbra::falling_factorial(5, 6) == 0);
    CHECK(umbra::falling_factorial(3, 10) == 0);
}

TEST_CASE("pow_rational", "[exactnum]") {
    CHECK(umbra::pow_rational(umbra::frac(1, 2), 0) == Rational(1));
    CHECK(umbra::pow_rational(umbra::frac(1, 2), 3) == umbra::frac(1, 8));
    CHECK(umbra::pow_rational(umbra::frac(-2, 3), 2) == umbra::frac(4, 9));
    CHECK(umbra::pow_rational(Rational(0), 4) == Rational(0));
}

TEST_CASE("is_integral and to_integer", "[exactnum]") {
    CHECK(umbra::is_integral(Rational(7)));
    CHECK(umbra::is_integral(umbra::frac(14, 2)));
    CHECK_FALSE(umbra::is_integral(umbra::frac(1, 2)));

    CHECK(umbra::to_integer(Rational(-9), "test") == BigInt(-9));
    CHECK_THROWS_AS(umbra::to_integer(umbra::frac(3, 2), "test"), std::logic_error);
}

TEST_CASE("rational arithmetic stays canonical under random ops", "[exactnum][property]") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 50);

    for (int trial = 0; trial < 200; ++trial) {
        Rational a = umbra::frac(num(rng), den(rng));
        Rational b = umbra::frac(num(rng), den(rng));
        Rational c = umbra::frac(num(rng), den(rng));

        // Field axioms on a random triple.
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (b != 0) {
            CHECK(a / b * b == a);
        }

        // Canonical form: gcd(num, den) == 1 and den > 0.
        Rational s = a * b + c;
        CHECK(boost::multiprecision::gcd(boost::multiprecision::numerator(s),
                                         boost::multiprecision::denominator(s)) == 1);
        CHECK(boost::multiprecision::denominator(s) > 0);
    }
}
