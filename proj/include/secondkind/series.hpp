#pragma once

#include <algorithm>
#include <optional>

#include "secondkind/chg.hpp"
#include "secondkind/laurent.hpp"
#include "secondkind/poly.hpp"
#include "secondkind/rational.hpp"

namespace secondkind {

/// Second solution as the DLMF-style Laurent-log series (the N!n!
/// normalization), assembled term by term from its three sums:
///
///   N!n! sum_{k=1}^{n} (k-1)!/((n-k)!(N+k)!) x^{-k}
///   - N!n! sum_{k=0}^{N} (-1)^k/((N-k)!(n+k)!k!) x^k
///       (ln x + psi(1+N-k) - psi(1+k) - psi(1+n+k))
///   + (-1)^{1+N} N!n! sum_{k>=N+1} (k-N-1)!/((n+k)!k!) x^k
///
/// with psi(1+m) = -eulergamma + H_m kept exact in Q + Q*eulergamma, and the
/// tail truncated at x^order. The pole part is finite and emitted completely.
inline LaurentLogExpansion dlmf_series(ChgParams p, long order) {
    LaurentLogExpansion e(order);
    const long N = static_cast<long>(p.N);
    const long n = static_cast<long>(p.n);
    const Rational scale = factorial(N) * factorial(n);

    for (long k = 1; k <= n; ++k)
        e.add_pole(-k, scale * factorial(k - 1) / (factorial(n - k) * factorial(N + k)));

    for (long k = 0; k <= N && k <= order; ++k) {
        Rational a = scale / (factorial(N - k) * factorial(n + k) * factorial(k));
        if (k % 2 != 0) a = -a;
        // psi(1+N-k) - psi(1+k) - psi(1+n+k) = eulergamma + H_{N-k} - H_k - H_{n+k}
        Rational h = harmonic_range(1, N - k) - harmonic_range(1, k) - harmonic_range(1, n + k);
        e.add_log(k, -a);
        e.add_regular(k, -a * h, -a);
    }

    const Rational tail_sign(p.N % 2 == 0 ? -1 : 1);  // (-1)^{1+N}
    for (long k = N + 1; k <= order; ++k)
        e.add_regular(k, tail_sign * scale * factorial(k - N - 1) / (factorial(n + k) * factorial(k)));
    return e;
}

/// Expansion of Psibar(N,n,x) e^x / x^n: the part of the closed form that
/// carries the entire pole channel.
inline LaurentLogExpansion polynomial_part_series(ChgParams p, long order) {
    LaurentLogExpansion e(order);
    const long n = static_cast<long>(p.n);
    DensePoly u = psibar(p) * exp_truncated(static_cast<std::size_t>(n + order));
    for (long d = 0; d <= n + order; ++d) {
        Rational c = u.coefficient(static_cast<std::size_t>(d));
        if (c.is_zero()) continue;
        if (d < n)
            e.add_pole(d - n, c);
        else
            e.add_regular(d - n, c);
    }
    return e;
}

/// Expansion of -Phi(N,n,x) Ei(x), using
/// Ei(x) = eulergamma + ln x + sum_{k>=1} x^k/(k k!): the part of the closed
/// form that carries the whole log and eulergamma channels.
inline LaurentLogExpansion exp_integral_part_series(ChgParams p, long order) {
    LaurentLogExpansion e(order);
    DensePoly f = phi(p);
    const long deg = f.is_zero() ? -1 : static_cast<long>(*f.degree());
    for (long k = 0; k <= deg && k <= order; ++k) {
        Rational c = f.coefficient(static_cast<std::size_t>(k));
        e.add_log(k, -c);
        e.add_regular(k, Rational(0), -c);
    }
    DensePoly tail;  // sum_{j=1}^{order} x^j/(j j!)
    for (long j = 1; j <= order; ++j)
        tail.add_term(static_cast<std::size_t>(j), Rational(1) / (Rational(j) * factorial(j)));
    DensePoly prod = f * tail;
    for (long k = 0; k <= order; ++k)
        e.add_regular(k, -prod.coefficient(static_cast<std::size_t>(k)));
    return e;
}

/// Second solution by expanding the closed form
/// Psibar e^x/x^n - Phi Ei(x), truncated at x^order. Shares the DLMF-series
/// normalization exactly, so the two routes are directly comparable.
inline LaurentLogExpansion closed_form_series(ChgParams p, long order) {
    return polynomial_part_series(p, order) + exp_integral_part_series(p, order);
}

/// Result of the coefficientwise comparison of the two routes.
struct ExpansionReport {
    ChgParams params;
    long order = 0;
    bool equal = false;
    std::optional<ExpansionMismatch> first_mismatch;
};

inline ExpansionReport compare_expansions(ChgParams p, long order) {
    auto mismatch = first_difference(dlmf_series(p, order), closed_form_series(p, order));
    return {p, order, !mismatch.has_value(), mismatch};
}

}  // namespace secondkind
