#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "secondkind/bezout.hpp"

using namespace secondkind;

namespace {

DensePoly random_poly(std::mt19937_64& rng, std::size_t max_deg) {
    std::uniform_int_distribution<std::size_t> d(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::vector<Rational> c;
    std::size_t deg = d(rng);
    for (std::size_t i = 0; i <= deg; ++i) c.emplace_back(num(rng), den(rng));
    return DensePoly(std::move(c));
}

}  // namespace

TEST_CASE("ext_euclid basics") {
    DensePoly x_minus_1{Rational(-1), Rational(1)};
    auto r = ext_euclid(x_minus_1, DensePoly::constant(Rational(1)));
    CHECK(r.s.is_zero());
    CHECK(r.t == DensePoly::constant(Rational(1)));
    CHECK(r.g == DensePoly::constant(Rational(1)));

    DensePoly p{Rational(2), Rational(-5), Rational(3)};
    auto self = ext_euclid(p, p);
    CHECK(self.g == p * (Rational(1) / p.leading_coefficient()));
    CHECK(self.s * p + self.t * p == self.g);

    CHECK_THROWS_AS(ext_euclid(DensePoly(), DensePoly()), std::domain_error);
}

TEST_CASE("ext_euclid on Phi(2,1) and its derivative") {
    DensePoly f = phi({2, 1});
    auto r = ext_euclid(f, derivative(f));
    // hand-run extended Euclid on 1 - x + x^2/6 and -1 + x/3
    CHECK(r.g == DensePoly::constant(Rational(1)));
    CHECK(r.s == DensePoly::constant(Rational(-2)));
    CHECK(r.t == DensePoly{Rational(-3), Rational(1)});
    CHECK(*r.s.degree() == 0);
    CHECK(*r.t.degree() == 1);
}

TEST_CASE("ext_euclid postcondition on random pairs") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        DensePoly a = random_poly(rng, 12);
        DensePoly b = random_poly(rng, 12);
        if (a.is_zero() && b.is_zero()) continue;
        auto r = ext_euclid(a, b);
        CHECK(r.s * a + r.t * b == r.g);
        CHECK(!r.g.is_zero());
        CHECK(r.g.leading_coefficient() == Rational(1));
        // the gcd divides both inputs
        if (!a.is_zero()) CHECK(divrem(a, r.g).second.is_zero());
        if (!b.is_zero()) CHECK(divrem(b, r.g).second.is_zero());
        // minimal-pair degree bounds
        if (!a.is_zero() && !b.is_zero() && *a.degree() > 0 && *b.degree() > 0) {
            if (!r.s.is_zero()) CHECK(*r.s.degree() < *b.degree() - *r.g.degree());
            if (!r.t.is_zero()) CHECK(*r.t.degree() < *a.degree() - *r.g.degree());
        }
    }
}

TEST_CASE("bezout_phi") {
    // N = 1: Phi' is the constant -1/(n+1), so s = 0 and t = -(n+1)
    for (unsigned long n = 0; n <= 5; ++n) {
        auto pair = bezout_phi({1, n});
        CHECK(pair.s.is_zero());
        CHECK(pair.t == DensePoly::constant(Rational(-(static_cast<long>(n) + 1))));
    }

    auto pair21 = bezout_phi({2, 1});
    CHECK(pair21.s == DensePoly::constant(Rational(-2)));
    CHECK(pair21.t == DensePoly{Rational(-3), Rational(1)});

    auto pair53 = bezout_phi({5, 3});
    CHECK(*pair53.s.degree() == 3);
    CHECK(*pair53.t.degree() == 4);

    for (unsigned long N = 2; N <= 8; ++N)
        for (unsigned long n = 0; n <= 8; ++n) {
            auto pair = bezout_phi({N, n});
            DensePoly f = phi({N, n});
            CHECK(pair.s * f + pair.t * derivative(f) == DensePoly::constant(Rational(1)));
            CHECK(*pair.s.degree() == N - 2);
            CHECK(*pair.t.degree() == N - 1);
        }

    CHECK_THROWS_AS(bezout_phi({0, 3}), std::domain_error);
}

TEST_CASE("closed-form pair equals the Euclidean pair") {
    for (unsigned long N = 1; N <= 8; ++N)
        for (unsigned long n = 0; n <= 8; ++n) {
            auto euclid = bezout_phi({N, n});
            auto closed = closed_form_pair({N, n});
            CHECK(closed.s == euclid.s);
            CHECK(closed.t == euclid.t);
        }
    // constant term of t is -(N+n)!/(N!n!)
    for (unsigned long N = 1; N <= 6; ++N)
        for (unsigned long n = 0; n <= 6; ++n)
            CHECK(closed_form_pair({N, n}).t.coefficient(0) ==
                  -(factorial(N + n) / (factorial(N) * factorial(n))));
}

TEST_CASE("cancellation identity") {
    CHECK(cancellation_constant({2, 1}) == Rational(6));
    CHECK(cancellation_identity({2, 1}));
    CHECK(cancellation_constant({1, 0}) == Rational(1));
    CHECK(cancellation_identity({1, 0}));
    for (unsigned long N = 1; N <= 8; ++N)
        for (unsigned long n = 0; n <= 8; ++n) CHECK(cancellation_identity({N, n}));

    // perturbing t breaks the cancellation
    ChgParams p{2, 1};
    auto pair = bezout_phi(p);
    DensePoly t_bad = pair.t + DensePoly::constant(Rational(1));
    const DensePoly x = DensePoly::monomial(Rational(1), 1);
    DensePoly n1_minus_x{Rational(static_cast<long>(p.n) + 1), Rational(-1)};
    DensePoly lhs = x * derivative(t_bad) - n1_minus_x * t_bad + x * pair.s;
    CHECK(lhs != phi(p) * cancellation_constant(p));
}
