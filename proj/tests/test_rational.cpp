#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "secondkind/rational.hpp"

using namespace secondkind;

TEST_CASE("rationals are canonical") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(21, 14).to_string() == "3/2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("string round trip") {
    for (const char* s : {"0", "-7", "3/2", "-22/7", "479001600"}) {
        Rational r = Rational::from_string(s);
        CHECK(r.to_string() == s);
    }
    CHECK(Rational::from_string("4/6") == Rational(2, 3));
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == Rational(1));
    // direct-product oracle
    Rational prod(1);
    for (long i = 1; i <= 5; ++i) prod *= Rational(i);
    CHECK(factorial(5) == prod);
    CHECK(factorial(5) == Rational(120));
    CHECK(factorial(12) == Rational(479001600L));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rational(17, 3), 0) == Rational(1));
    CHECK(pochhammer(Rational(-3), 2) == Rational(6));
    CHECK(pochhammer(Rational(-3), 4) == Rational(0));
    // (-N)_k vanishes exactly when k > N
    for (unsigned long N = 0; N <= 9; ++N)
        for (unsigned long k = 0; k <= 12; ++k)
            CHECK(pochhammer(Rational(-static_cast<long>(N)), k).is_zero() == (k > N));
}

TEST_CASE("harmonic_range") {
    CHECK(harmonic_range(1, 4) == Rational(25, 12));
    CHECK(harmonic_range(5, 4) == Rational(0));
    CHECK(harmonic_range(2, 3) == Rational(5, 6));
    CHECK_THROWS_AS(harmonic_range(0, 3), std::domain_error);
    for (long m = 2; m <= 30; ++m)
        CHECK(harmonic_range(1, m) - harmonic_range(1, m - 1) == Rational(1, m));
}

TEST_CASE("field laws on random samples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-500, 500), den(1, 40);
    for (int i = 0; i < 100; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("integer powers") {
    CHECK(pow(Rational(-3, 2), 3) == Rational(-27, 8));
    CHECK(pow(Rational(0), 0) == Rational(1));
    CHECK(pow(Rational(2), 20) == Rational(1048576));
}
