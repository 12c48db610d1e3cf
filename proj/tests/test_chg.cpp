#include <catch2/catch_amalgamated.hpp>

#include "secondkind/chg.hpp"

using namespace secondkind;

TEST_CASE("phi") {
    for (unsigned long n = 0; n <= 5; ++n) CHECK(phi({0, n}) == DensePoly::constant(Rational(1)));
    for (unsigned long n = 0; n <= 5; ++n)
        CHECK(phi({1, n}) == DensePoly{Rational(1), Rational(-1, static_cast<long>(n) + 1)});
    CHECK(phi({2, 1}) == DensePoly{Rational(1), Rational(-1), Rational(1, 6)});
    CHECK(*phi({7, 3}).degree() == 7);
    CHECK(phi({7, 3}).coefficient(0) == Rational(1));
}

TEST_CASE("p_poly table entries") {
    CHECK(p_poly({2, 1}) == DensePoly{Rational(2), Rational(-5), Rational(1)});
    CHECK(p_poly({0, 4}) == DensePoly{Rational(6), Rational(2), Rational(1), Rational(1)});
    CHECK(p_poly({3, 0}) == DensePoly{Rational(-11), Rational(8), Rational(-1)});
    CHECK(p_poly({0, 0}).is_zero());
}

TEST_CASE("p_poly structure") {
    for (unsigned long N = 0; N <= 8; ++N) {
        for (unsigned long n = 0; n <= 8; ++n) {
            DensePoly p = p_poly({N, n});
            CHECK(p == p_poly({N, n}, PPolyMethod::direct));
            if (N == 0 && n == 0) {
                CHECK(p.is_zero());
                continue;
            }
            CHECK(*p.degree() == (N == 0 ? n - 1 : N + n - 1));
            if (N >= 1) CHECK(p.leading_coefficient() == Rational(N % 2 == 0 ? 1 : -1));
            for (const auto& c : p.coefficients()) CHECK(c.is_integer());
        }
    }
}

TEST_CASE("c_coeff") {
    CHECK(c_coeff({2, 1}, 0, CCoeffMethod::harmonic) == Rational(-5));
    CHECK(c_coeff({2, 1}, 0, CCoeffMethod::doublesum) == Rational(-5));
    for (unsigned long N = 1; N <= 8; ++N)
        for (unsigned long n = 0; n <= 8; ++n) {
            CHECK(c_coeff({N, n}, N - 1, CCoeffMethod::harmonic) ==
                  Rational(N % 2 == 0 ? 1 : -1));
            // m = 0: -((n+N)!/n!) * sum_{k=n+1}^{N+n} 1/k
            CHECK(c_coeff({N, n}, 0, CCoeffMethod::harmonic) ==
                  -(factorial(N + n) / factorial(n)) *
                      harmonic_range(static_cast<long>(n) + 1, static_cast<long>(N + n)));
            for (unsigned long m = 0; m < N; ++m)
                CHECK(c_coeff({N, n}, m, CCoeffMethod::doublesum) ==
                      c_coeff({N, n}, m, CCoeffMethod::harmonic));
            // coefficient of x^{n+m} in the polynomial itself
            DensePoly p = p_poly({N, n});
            for (unsigned long m = 0; m < N; ++m)
                CHECK(p.coefficient(n + m) == c_coeff({N, n}, m, CCoeffMethod::harmonic));
        }
    CHECK_THROWS_AS(c_coeff({2, 1}, 2, CCoeffMethod::harmonic), std::out_of_range);
    CHECK_THROWS_AS(c_coeff({0, 3}, 0, CCoeffMethod::harmonic), std::out_of_range);
}

TEST_CASE("terminating Gauss sum equals its closed form") {
    // sum_{k=0}^{N} (-N)_k (n-m)_k / ((n+1)_k k!) = n!(N+m)!/((N+n)! m!)
    for (unsigned long N = 0; N <= 8; ++N)
        for (unsigned long n = 1; n <= 8; ++n)
            for (unsigned long m = 0; m < n; ++m) {
                Rational sum(0);
                for (unsigned long k = 0; k <= N; ++k)
                    sum += pochhammer(Rational(-static_cast<long>(N)), k) *
                           pochhammer(Rational(static_cast<long>(n - m)), k) /
                           (pochhammer(Rational(static_cast<long>(n) + 1), k) * factorial(k));
                CHECK(sum == factorial(n) * factorial(N + m) / (factorial(N + n) * factorial(m)));
            }
}

TEST_CASE("psibar") {
    // N = 0: sum_{m=0}^{n-1} (n-1-m)! x^m
    for (unsigned long n = 1; n <= 6; ++n) {
        DensePoly expected;
        for (unsigned long m = 0; m < n; ++m) expected.add_term(m, factorial(n - 1 - m));
        CHECK(psibar({0, n}) == expected);
    }
    // N = 1: (1 - x/(n+1)) psibar(0,n) - n!/(n+1)
    for (unsigned long n = 1; n <= 6; ++n) {
        DensePoly expected = phi({1, n}) * psibar({0, n}) -
                             DensePoly::constant(factorial(n) / Rational(static_cast<long>(n) + 1));
        CHECK(psibar({1, n}) == expected);
    }
    CHECK(psibar({2, 1}) == DensePoly{Rational(1, 3), Rational(-5, 6), Rational(1, 6)});
}

TEST_CASE("degree recurrence") {
    CHECK(verify_degree_recurrence({1, 1}, SolutionKind::first_kind));
    CHECK(verify_degree_recurrence({3, 2}, SolutionKind::second_kind));
    for (unsigned long N = 1; N <= 6; ++N)
        for (unsigned long n = 0; n <= 6; ++n) {
            CHECK(verify_degree_recurrence({N, n}, SolutionKind::first_kind));
            CHECK(verify_degree_recurrence({N, n}, SolutionKind::second_kind));
        }
    CHECK_THROWS_AS(verify_degree_recurrence({0, 2}, SolutionKind::first_kind), std::domain_error);

    // a perturbed middle term breaks the identity
    unsigned long N = 3, n = 2;
    DensePoly perturbed = psibar({N, n}) + DensePoly::constant(Rational(1));
    DensePoly weight{Rational(static_cast<long>(2 * N + n + 1)), Rational(-1)};
    DensePoly combo = psibar({N + 1, n}) * Rational(static_cast<long>(N + n + 1)) -
                      weight * perturbed + psibar({N - 1, n}) * Rational(static_cast<long>(N));
    CHECK(!combo.is_zero());
}

TEST_CASE("order recurrence") {
    CHECK(verify_order_recurrence({2, 2}, SolutionKind::first_kind));
    CHECK(verify_order_recurrence({1, 1}, SolutionKind::second_kind));
    CHECK(verify_order_recurrence({0, 1}, SolutionKind::second_kind));
    for (unsigned long N = 0; N <= 6; ++N)
        for (unsigned long n = 1; n <= 6; ++n) {
            CHECK(verify_order_recurrence({N, n}, SolutionKind::first_kind));
            CHECK(verify_order_recurrence({N, n}, SolutionKind::second_kind));
        }
    CHECK_THROWS_AS(verify_order_recurrence({2, 0}, SolutionKind::first_kind), std::domain_error);
}

TEST_CASE("casoratian") {
    for (unsigned long n = 0; n <= 8; ++n) {
        CHECK(casoratian_closed({0, n}) == factorial(n) / Rational(static_cast<long>(n) + 1));
        CHECK(casoratian_check({0, n}));
    }
    CHECK(casoratian_closed({2, 1}) == Rational(1, 12));
    for (unsigned long N = 0; N <= 6; ++N)
        for (unsigned long n = 0; n <= 6; ++n) CHECK(casoratian_check({N, n}));
}

TEST_CASE("laguerre wrappers") {
    for (unsigned long n = 0; n <= 4; ++n)
        CHECK(laguerre_first({0, n}) == DensePoly::constant(Rational(1)));
    auto second01 = laguerre_second({0, 1});
    CHECK(second01.pole_order == 1);
    CHECK(second01.poly == DensePoly::constant(Rational(1)));
    auto second21 = laguerre_second({2, 1});
    CHECK(second21.pole_order == 1);
    CHECK(second21.poly == DensePoly{Rational(1, 3), Rational(-5, 6), Rational(1, 6)});
}

TEST_CASE("value at zero") {
    CHECK(p_at_zero({2, 3}) == Rational(4));
    CHECK(p_at_zero({4, 1}) == Rational(24));
    CHECK(p_at_zero({0, 1}) == Rational(1));
    for (unsigned long N = 0; N <= 8; ++N)
        for (unsigned long n = 1; n <= 8; ++n)
            CHECK(p_at_zero({N, n}) == factorial(N) * factorial(n - 1));
    CHECK_THROWS_AS(p_at_zero({3, 0}), std::domain_error);
}
