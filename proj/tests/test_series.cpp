#include <catch2/catch_amalgamated.hpp>

#include "secondkind/series.hpp"

using namespace secondkind;

TEST_CASE("expansion container") {
    LaurentLogExpansion e(4);
    e.add_pole(-2, Rational(3));
    e.add_pole(-2, Rational(-3));  // cancels; zero entries are not stored
    CHECK(e.pole_part().empty());
    e.add_regular(1, Rational(1, 2), Rational(-1));
    CHECK(e.regular(1) == GammaValue{Rational(1, 2), Rational(-1)});
    CHECK(e.regular(3) == GammaValue{Rational(0), Rational(0)});
    CHECK_THROWS_AS(e.add_regular(5, Rational(1)), std::out_of_range);
    CHECK_THROWS_AS(e.add_pole(0, Rational(1)), std::out_of_range);
    CHECK_THROWS_AS(LaurentLogExpansion(-1), std::domain_error);
}

TEST_CASE("series route at (N,n) = (0,1)") {
    // hand evaluation of the three sums at these parameters
    LaurentLogExpansion e = dlmf_series({0, 1}, 1);
    CHECK(e.pole(-1) == Rational(1));
    CHECK(e.regular(0) == GammaValue{Rational(1), Rational(-1)});  // 1 - eulergamma
    CHECK(e.regular(1) == GammaValue{Rational(-1, 2), Rational(0)});
    CHECK(e.log_at(0) == Rational(-1));
    CHECK(e.log_part().size() == 1);
}

TEST_CASE("closed-form route at (N,n) = (0,1)") {
    // e^x/x - (eulergamma + ln x + x + x^2/4 + ...) by hand
    LaurentLogExpansion e = closed_form_series({0, 1}, 1);
    CHECK(e.pole(-1) == Rational(1));
    CHECK(e.regular(0) == GammaValue{Rational(1), Rational(-1)});
    CHECK(e.regular(1) == GammaValue{Rational(-1, 2), Rational(0)});
    CHECK(e.log_at(0) == Rational(-1));
}

TEST_CASE("log and gamma channels carry -Phi on both routes") {
    for (unsigned long N = 0; N <= 4; ++N)
        for (unsigned long n = 0; n <= 4; ++n) {
            DensePoly f = phi({N, n});
            LaurentLogExpansion dl = dlmf_series({N, n}, 12);
            LaurentLogExpansion cf = closed_form_series({N, n}, 12);
            for (long k = 0; k <= 12; ++k) {
                Rational expect = -f.coefficient(static_cast<std::size_t>(k));
                CHECK(dl.log_at(k) == expect);
                CHECK(dl.regular(k).gamma == expect);
                CHECK(cf.log_at(k) == expect);
                CHECK(cf.regular(k).gamma == expect);
            }
        }
}

TEST_CASE("pole channel") {
    // deepest pole coefficient is N!n!(n-1)!/(N+n)!, the k = n term of the
    // pole sum; on the closed-form route it is psibar(0) = (n!/(N+n)!) P(N,n,0)
    for (unsigned long N = 0; N <= 4; ++N)
        for (unsigned long n = 1; n <= 4; ++n) {
            Rational expect =
                factorial(N) * factorial(n) * factorial(n - 1) / factorial(N + n);
            CHECK(dlmf_series({N, n}, 4).pole(-static_cast<long>(n)) == expect);
            CHECK(polynomial_part_series({N, n}, 4).pole(-static_cast<long>(n)) == expect);
        }
    // whole pole channel of the closed-form route: coefficient at x^{l-n} is
    // N!n!(n-1-l)!/(l!(N+n-l)!) for l = 0..n-1
    for (unsigned long N = 0; N <= 4; ++N)
        for (unsigned long n = 1; n <= 4; ++n) {
            LaurentLogExpansion e = polynomial_part_series({N, n}, 4);
            for (unsigned long l = 0; l < n; ++l)
                CHECK(e.pole(static_cast<long>(l) - static_cast<long>(n)) ==
                      factorial(N) * factorial(n) * factorial(n - 1 - l) /
                          (factorial(l) * factorial(N + n - l)));
        }
}

TEST_CASE("the two routes coincide") {
    for (ChgParams p : {ChgParams{0, 1}, ChgParams{3, 2}, ChgParams{0, 0}, ChgParams{5, 5}}) {
        ExpansionReport r = compare_expansions(p, 20);
        CHECK(r.equal);
        CHECK(!r.first_mismatch.has_value());
    }
}

TEST_CASE("a flipped exponential-integral sign is caught in the log channel at x^0") {
    ChgParams p{0, 1};
    LaurentLogExpansion flipped =
        polynomial_part_series(p, 8) - exp_integral_part_series(p, 8);
    auto mismatch = first_difference(dlmf_series(p, 8), flipped);
    REQUIRE(mismatch.has_value());
    CHECK(mismatch->channel == "log");
    CHECK(mismatch->exponent == 0);
    ExpansionReport bad{p, 8, false, mismatch};
    CHECK(!bad.equal);
}

TEST_CASE("truncation stability") {
    for (ChgParams p : {ChgParams{0, 1}, ChgParams{2, 2}, ChgParams{4, 3}}) {
        CHECK(componentwise_equal(dlmf_series(p, 10), dlmf_series(p, 20)));
        CHECK(componentwise_equal(closed_form_series(p, 10), closed_form_series(p, 20)));
    }
}

TEST_CASE("expansion arithmetic") {
    LaurentLogExpansion a(3), b(3);
    a.add_regular(2, Rational(1), Rational(2));
    a.add_log(0, Rational(5));
    b.add_regular(2, Rational(-1), Rational(1));
    b.add_pole(-1, Rational(7));
    LaurentLogExpansion sum = a + b;
    CHECK(sum.regular(2) == GammaValue{Rational(0), Rational(3)});
    CHECK(sum.pole(-1) == Rational(7));
    CHECK(sum.log_at(0) == Rational(5));
    LaurentLogExpansion diff = a - a;
    CHECK(diff.pole_part().empty());
    CHECK(diff.regular_part().empty());
    CHECK(diff.log_part().empty());
}
