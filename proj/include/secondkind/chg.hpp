#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "secondkind/poly.hpp"
#include "secondkind/rational.hpp"

namespace secondkind {

/// Degenerate confluent-hypergeometric parameters: first parameter a = -N
/// (non-positive integer), second parameter b = n + 1 (positive integer).
struct ChgParams {
    unsigned long N = 0;
    unsigned long n = 0;

    friend bool operator==(const ChgParams&, const ChgParams&) = default;
};

/// First solution Phi(N,n,x) = 1F1(-N; n+1; x)
///               = sum_{k=0}^{N} (-N)_k / ((n+1)_k k!) x^k.
/// Degree N, constant term 1.
inline DensePoly phi(ChgParams p) {
    DensePoly out;
    Rational term(1);
    out.add_term(0, term);
    for (unsigned long k = 1; k <= p.N; ++k) {
        // term_k = term_{k-1} * (-N + k - 1) / ((n + k) * k)
        term *= Rational(-static_cast<long>(p.N) + static_cast<long>(k) - 1);
        term /= Rational(static_cast<long>(p.n + k) * static_cast<long>(k));
        out.add_term(k, term);
    }
    return out;
}

enum class PPolyMethod { resummed, direct };
enum class CCoeffMethod { doublesum, harmonic };

/// Coefficient of x^{n+m} in P(N,n,x), 0 <= m <= N-1, by either of two
/// independent formulas:
///
///   doublesum: (-1)^{m+1} sum_{k=0}^{N-m-1} (-1)^k N!/(N-k-m-1)!
///                * (N+n)!/(n+k+m+1)! * k!/(k+m+1)!
///   harmonic:  (-1)^{m+1} (N+n)!/((n+m)! m!)
///                * sum_{k=n+m+1}^{N+n} (N+n+1-k)_m / k
inline Rational c_coeff(ChgParams p, unsigned long m, CCoeffMethod method) {
    if (p.N == 0 || m > p.N - 1)
        throw std::out_of_range("c_coeff: m = " + std::to_string(m) + " outside [0, N-1]");
    const long N = static_cast<long>(p.N);
    const long n = static_cast<long>(p.n);
    const long mm = static_cast<long>(m);
    Rational sign((m + 1) % 2 == 0 ? 1 : -1);
    if (method == CCoeffMethod::doublesum) {
        Rational sum(0);
        for (long k = 0; k <= N - mm - 1; ++k) {
            Rational term = factorial(N) / factorial(N - k - mm - 1);
            term *= factorial(N + n) / factorial(n + k + mm + 1);
            term *= factorial(k) / factorial(k + mm + 1);
            if (k % 2 != 0) term = -term;
            sum += term;
        }
        return sign * sum;
    }
    Rational pref = factorial(N + n) / (factorial(n + mm) * factorial(mm));
    Rational sum(0);
    for (long k = n + mm + 1; k <= N + n; ++k)
        sum += pochhammer(Rational(N + n + 1 - k), m) / Rational(k);
    return sign * pref * sum;
}

/// Second-kind polynomial P(N,n,x), degree N+n-1 (zero when N = n = 0),
/// normalized so the leading coefficient is (-1)^N; all coefficients are
/// integers. Two independent construction routes are shipped:
///
///   direct:   (N+n)!/n! * sum_{k=0}^{N} sum_{m=0}^{n+k-1}
///                 (-N)_k (n+k-1-m)! / ((n+1)_k k!) x^m
///   resummed: sum_{m=0}^{n-1} (N+m)!(n-m-1)!/m! x^m
///             + sum_{m=0}^{N-1} c(N,n,m) x^{n+m}   (harmonic c-formula)
inline DensePoly p_poly(ChgParams p, PPolyMethod method = PPolyMethod::resummed) {
    const long N = static_cast<long>(p.N);
    const long n = static_cast<long>(p.n);
    DensePoly out;
    if (method == PPolyMethod::direct) {
        Rational outer(1);  // (-N)_k / ((n+1)_k k!)
        for (long k = 0; k <= N; ++k) {
            if (k > 0) {
                outer *= Rational(-N + k - 1);
                outer /= Rational((n + k) * k);
            }
            for (long m = 0; m <= n + k - 1; ++m)
                out.add_term(m, outer * factorial(n + k - 1 - m));
        }
        out *= factorial(N + n) / factorial(n);
        return out;
    }
    for (long m = 0; m < n; ++m)
        out.add_term(m, factorial(N + m) * factorial(n - m - 1) / factorial(m));
    for (long m = 0; m < N; ++m)
        out.add_term(n + m, c_coeff(p, m, CCoeffMethod::harmonic));
    return out;
}

/// Psibar(N,n,x) = (n!/(N+n)!) P(N,n,x); satisfies the same three-term
/// recurrence in N as Phi.
inline DensePoly psibar(ChgParams p) {
    return p_poly(p) * (factorial(p.n) / factorial(p.N + p.n));
}

enum class SolutionKind { first_kind, second_kind };

namespace detail {

inline DensePoly chg_family(ChgParams p, SolutionKind kind) {
    return kind == SolutionKind::first_kind ? phi(p) : psibar(p);
}

}  // namespace detail

/// Three-term recurrence in the degree parameter N, as an exact polynomial
/// identity:
///
///   (N+n+1) F(N+1,n,x) - (2N+n+1-x) F(N,n,x) + N F(N-1,n,x) = 0
///
/// for F = Phi (first kind) or Psibar (second kind). Requires N >= 1.
inline bool verify_degree_recurrence(ChgParams p, SolutionKind kind) {
    if (p.N < 1) throw std::domain_error("verify_degree_recurrence: requires N >= 1");
    const long N = static_cast<long>(p.N);
    const long n = static_cast<long>(p.n);
    DensePoly up = detail::chg_family({p.N + 1, p.n}, kind);
    DensePoly mid = detail::chg_family(p, kind);
    DensePoly down = detail::chg_family({p.N - 1, p.n}, kind);
    DensePoly weight{Rational(2 * N + n + 1), Rational(-1)};  // 2N+n+1 - x
    DensePoly combo = up * Rational(N + n + 1) - weight * mid + down * Rational(N);
    return combo.is_zero();
}

/// Three-term recurrence in the order parameter n. Requires n >= 1.
///
/// First kind:  n(n+1) Phi(N,n-1,x) - (n+1)(n+x) Phi(N,n,x)
///                + x(N+n+1) Phi(N,n+1,x) = 0.
/// Second kind: the same relation for x^{-n} Psibar(N,n,x); verified after
/// multiplying through by x^{n+1}, which keeps every term polynomial:
///   n(n+1) x^2 Psibar(N,n-1,x) - (n+1)(n+x) x Psibar(N,n,x)
///     + (N+n+1) x Psibar(N,n+1,x) = 0.
inline bool verify_order_recurrence(ChgParams p, SolutionKind kind) {
    if (p.n < 1) throw std::domain_error("verify_order_recurrence: requires n >= 1");
    const long N = static_cast<long>(p.N);
    const long n = static_cast<long>(p.n);
    DensePoly down = detail::chg_family({p.N, p.n - 1}, kind);
    DensePoly mid = detail::chg_family(p, kind);
    DensePoly up = detail::chg_family({p.N, p.n + 1}, kind);
    const DensePoly x = DensePoly::monomial(Rational(1), 1);
    DensePoly n_plus_x{Rational(n), Rational(1)};
    DensePoly combo;
    if (kind == SolutionKind::first_kind) {
        combo = down * Rational(n * (n + 1)) - n_plus_x * mid * Rational(n + 1) +
                x * up * Rational(N + n + 1);
    } else {
        combo = x * x * down * Rational(n * (n + 1)) -
                x * n_plus_x * mid * Rational(n + 1) + x * up * Rational(N + n + 1);
    }
    return combo.is_zero();
}

/// Casoratian of the pair (Phi, Psibar) in the N direction,
/// C(N+1) = Phi(N+1)Psibar(N) - Psibar(N+1)Phi(N), which telescopes to the
/// x-independent value N!(n!)^2/(N+n+1)!.
inline Rational casoratian_closed(ChgParams p) {
    return factorial(p.N) * factorial(p.n) * factorial(p.n) / factorial(p.N + p.n + 1);
}

/// Computes C(N+1) as a polynomial, asserts it is constant, and compares it
/// with the closed form. Nonzero value means the pair is independent.
inline bool casoratian_check(ChgParams p) {
    DensePoly c = phi({p.N + 1, p.n}) * psibar(p) - psibar({p.N + 1, p.n}) * phi(p);
    if (!c.is_zero() && *c.degree() > 0) return false;
    return c.coefficient(0) == casoratian_closed(p);
}

/// Normalized associated Laguerre polynomial of the first kind,
/// (N! n!/(N+n)!) L_N^(n)(x) = Phi(N,n,x).
inline DensePoly laguerre_first(ChgParams p) { return phi(p); }

/// Associated Laguerre function of the second kind,
/// (n!/(N+n)!) x^{-n} P(N,n,x), as a pole order plus polynomial numerator.
struct LaguerreSecond {
    unsigned long pole_order = 0;
    DensePoly poly;
};

inline LaguerreSecond laguerre_second(ChgParams p) { return {p.n, psibar(p)}; }

/// P(N,n,0); equals N!(n-1)! for n >= 1. Undefined at n = 0.
inline Rational p_at_zero(ChgParams p) {
    if (p.n == 0) throw std::domain_error("p_at_zero: undefined for n = 0");
    return p_poly(p)(Rational(0));
}

}  // namespace secondkind
