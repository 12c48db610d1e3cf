#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "secondkind/chg.hpp"
#include "secondkind/poly.hpp"
#include "secondkind/rational.hpp"

namespace secondkind {

struct ExtEuclidResult {
    DensePoly s, t, g;  // s*A + t*B = g, g monic
};

/// Extended Euclidean algorithm over Q[x] with the minimal-degree
/// normalization: g is the monic gcd, and when both inputs have positive
/// degree, deg s < deg B - deg g and deg t < deg A - deg g. The minimal pair
/// is unique, which makes closed-form candidates directly comparable.
inline ExtEuclidResult ext_euclid(const DensePoly& A, const DensePoly& B) {
    if (A.is_zero() && B.is_zero())
        throw std::domain_error("ext_euclid: gcd(0, 0) is undefined");
    if (B.is_zero()) {
        Rational inv_lc = Rational(1) / A.leading_coefficient();
        return {DensePoly::constant(inv_lc), DensePoly(), A * inv_lc};
    }
    DensePoly r0 = A, r1 = B;
    DensePoly s0 = DensePoly::constant(Rational(1)), s1;
    DensePoly t0, t1 = DensePoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::exchange(r1, r);
        DensePoly s2 = s0 - q * s1;
        s0 = std::exchange(s1, s2);
        DensePoly t2 = t0 - q * t1;
        t0 = std::exchange(t1, t2);
    }
    Rational inv_lc = Rational(1) / r0.leading_coefficient();
    DensePoly g = r0 * inv_lc;
    DensePoly s = s0 * inv_lc;
    DensePoly t = t0 * inv_lc;
    // Reduce s modulo B/g; the matching t is recovered by exact division.
    DensePoly b_over_g = divrem(B, g).first;
    s = divrem(s, b_over_g).second;
    auto [tq, tr] = divrem(g - s * A, B);
    if (!tr.is_zero()) throw std::logic_error("ext_euclid: non-exact cofactor division");
    return {s, tq, g};
}

/// Bezout pair for (Phi, Phi'): s*Phi + t*Phi' = 1 with deg s <= N-2 and
/// deg t <= N-1. Defined for N >= 1 (at N = 0, Phi' vanishes and the
/// relatively-prime premise fails).
struct BezoutPair {
    DensePoly s, t;
    ChgParams params;
};

inline BezoutPair bezout_phi(ChgParams p) {
    if (p.N < 1) throw std::domain_error("bezout_phi: requires N >= 1");
    DensePoly f = phi(p);
    auto r = ext_euclid(f, derivative(f));
    if (r.g != DensePoly::constant(Rational(1)))
        throw std::logic_error("bezout_phi: Phi and Phi' are not coprime at N=" +
                               std::to_string(p.N) + ", n=" + std::to_string(p.n));
    return {r.s, r.t, p};
}

namespace detail {

/// Terminating 3F2([a1,a2,a3],[b1,b2]; 1). The sum is cut where a numerator
/// Pochhammer factor reaches zero; for the parameter families used here that
/// happens strictly before any denominator factor can vanish.
inline Rational terminating_3f2(long a1, long a2, long a3, long b1, long b2) {
    Rational sum(0);
    Rational term(1);
    for (long j = 0;; ++j) {
        sum += term;
        if ((a1 + j) == 0 || (a2 + j) == 0 || (a3 + j) == 0) break;
        if ((b1 + j) == 0 || (b2 + j) == 0)
            throw std::domain_error("terminating_3f2: denominator parameter reached zero");
        term *= Rational((a1 + j)) * Rational((a2 + j)) * Rational((a3 + j));
        term /= Rational((b1 + j)) * Rational((b2 + j)) * Rational(j + 1);
    }
    return sum;
}

}  // namespace detail

/// The closed-form Bezout pair built from terminating hypergeometric sums:
///
///   s(N,n,x) = 1 - (N+n)!/((N-1)!(n+1)!)
///            + (N+n)!/((N-1)!n!) sum_{p=1}^{N-2} (1-N)_p/(n+2)_p
///                (1 - 3F2([-N+p+1, p, 1],[n+2+p, 1-N]; 1)) x^p/(p*p!)
///   t(N,n,x) = -(N+n)!/(N!n!) sum_{p=0}^{N-1} (1-N)_p/(n+2)_p
///                3F2([-N+p+1, p, 1],[n+2+p, 1-N]; 1) x^p/p!
///
/// By uniqueness of the minimal pair this equals bezout_phi wherever both
/// are defined.
inline BezoutPair closed_form_pair(ChgParams p) {
    if (p.N < 1) throw std::domain_error("closed_form_pair: requires N >= 1");
    const long N = static_cast<long>(p.N);
    const long n = static_cast<long>(p.n);

    DensePoly s;
    s.add_term(0, Rational(1) - factorial(N + n) / (factorial(N - 1) * factorial(n + 1)));
    Rational s_pref = factorial(N + n) / (factorial(N - 1) * factorial(n));
    for (long q = 1; q <= N - 2; ++q) {
        Rational ratio = pochhammer(Rational(1 - N), q) / pochhammer(Rational(n + 2), q);
        Rational f32 = detail::terminating_3f2(-N + q + 1, q, 1, n + 2 + q, 1 - N);
        s.add_term(q, s_pref * ratio * (Rational(1) - f32) / (Rational(q) * factorial(q)));
    }

    DensePoly t;
    Rational t_pref = -(factorial(N + n) / (factorial(N) * factorial(n)));
    for (long q = 0; q <= N - 1; ++q) {
        Rational ratio = pochhammer(Rational(1 - N), q) / pochhammer(Rational(n + 2), q);
        Rational f32 = detail::terminating_3f2(-N + q + 1, q, 1, n + 2 + q, 1 - N);
        t.add_term(q, t_pref * ratio * f32 / factorial(q));
    }
    return {s, t, p};
}

/// The constant c = (n+1)(N+n)!/(n!N!) in the cancellation identity below.
inline Rational cancellation_constant(ChgParams p) {
    return Rational(static_cast<long>(p.n) + 1) * factorial(p.N + p.n) /
           (factorial(p.n) * factorial(p.N));
}

/// Verifies the pole-cleared cancellation identity
///
///   x t' - (n+1-x) t + x s = c Phi
///
/// for the Euclidean Bezout pair. The cancellation is exact only because s
/// and t belong to this particular Phi.
inline bool cancellation_identity(ChgParams p) {
    auto pair = bezout_phi(p);
    const long n = static_cast<long>(p.n);
    const DensePoly x = DensePoly::monomial(Rational(1), 1);
    DensePoly n1_minus_x{Rational(n + 1), Rational(-1)};
    DensePoly lhs = x * derivative(pair.t) - n1_minus_x * pair.t + x * pair.s;
    return lhs == phi(p) * cancellation_constant(p);
}

}  // namespace secondkind
