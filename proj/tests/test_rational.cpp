#include <climits>
#include <sstream>

#include "doctest.h"
#include "futaki/rational.hpp"

using futaki::Rational;

TEST_CASE("construction canonicalizes to lowest terms, positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(mpz_class(6), mpz_class(-9)) == Rational(-2, 3));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(2, -4).den() == 2);  // denominator always positive
}

TEST_CASE("zero denominator is a domain error") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(mpz_class(3), mpz_class(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("long long boundaries survive exactly") {
    Rational lo(LLONG_MIN);
    Rational hi(LLONG_MAX);
    CHECK(lo.str() == std::to_string(LLONG_MIN));
    CHECK(hi.str() == std::to_string(LLONG_MAX));
    CHECK(lo + hi == Rational(-1));
    CHECK(Rational(LLONG_MIN, LLONG_MIN) == Rational(1));
}

TEST_CASE("from_string accepts p and p/q with optional signs") {
    CHECK(Rational::from_string("5") == Rational(5));
    CHECK(Rational::from_string("-5") == Rational(-5));
    CHECK(Rational::from_string("+5") == Rational(5));
    CHECK(Rational::from_string("3/6") == Rational(1, 2));
    CHECK(Rational::from_string("-3/6") == Rational(-1, 2));
    CHECK(Rational::from_string("3/-6") == Rational(-1, 2));
    CHECK(Rational::from_string("0/9") == Rational(0));
    CHECK(Rational::from_string("123456789012345678901234567890/2") ==
          Rational(mpz_class("123456789012345678901234567890"), mpz_class(2)));
}

TEST_CASE("from_string rejects malformed literals") {
    for (const char* bad : {"", "/", "1/", "/2", "1/2/3", "a", "1a", "1.5", " 1", "1 ",
                            "1/ 2", "--1", "1/0", "0/0", "1e3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::from_string(bad), std::invalid_argument);
    }
}

TEST_CASE("exact arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    Rational sum(0);
    for (int i = 1; i <= 10; ++i) sum += Rational(1, i);
    CHECK(sum == Rational(7381, 2520));  // harmonic number H_10
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(3, 2));
    CHECK(Rational(1, 2).sign() == 1);
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("str and stream output") {
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-22, 7).str() == "-22/7");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational(0).str() == "0");
    std::ostringstream os;
    os << Rational(-3, 9);
    CHECK(os.str() == "-1/3");
}

TEST_CASE("round-trip through str") {
    for (long long n = -20; n <= 20; ++n)
        for (long long d = 1; d <= 9; ++d) {
            Rational r(n, d);
            CHECK(Rational::from_string(r.str()) == r);
        }
}

TEST_CASE("is_integer and is_zero") {
    CHECK(Rational(4, 2).is_integer());
    CHECK(!Rational(1, 2).is_integer());
    CHECK(Rational(0).is_zero());
    CHECK(!Rational(1, 1000000).is_zero());
}

TEST_CASE("binomial and factorial helpers") {
    CHECK(futaki::binomial(7, 3) == Rational(35));
    CHECK(futaki::binomial(5, 0) == Rational(1));
    CHECK(futaki::binomial(5, 5) == Rational(1));
    CHECK(futaki::binomial(3, 5) == Rational(0));  // k > n
    CHECK(futaki::factorial(0) == Rational(1));
    CHECK(futaki::factorial(5) == Rational(120));
    CHECK(futaki::factorial(20) == Rational(2432902008176640000LL));
    CHECK(futaki::abs(Rational(-5, 3)) == Rational(5, 3));
    CHECK(futaki::abs(Rational(5, 3)) == Rational(5, 3));
}
