#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "secondkind/rational.hpp"

namespace secondkind {

/// Coefficients of the second-order linear homogeneous recurrence
///
///   a_n y_{n+2} + b_n y_{n+1} + c_n y_n = 0
///
/// given as total functions of the index, so index-dependent coefficients
/// (e.g. polynomials in n) stay exact at any index. The theory requires
/// a_n != 0 and c_n != 0; every checked accessor reports a violation at the
/// offending index. Specs are immutable after construction.
struct RecurrenceSpec {
    std::function<Rational(std::size_t)> a;
    std::function<Rational(std::size_t)> b;
    std::function<Rational(std::size_t)> c;

    struct Coeffs {
        Rational a, b, c;
    };

    Rational a_at(std::size_t n) const {
        Rational v = a(n);
        if (v.is_zero())
            throw std::domain_error("RecurrenceSpec: a_n = 0 at n = " + std::to_string(n));
        return v;
    }
    Rational c_at(std::size_t n) const {
        Rational v = c(n);
        if (v.is_zero())
            throw std::domain_error("RecurrenceSpec: c_n = 0 at n = " + std::to_string(n));
        return v;
    }
    Coeffs at(std::size_t n) const { return Coeffs{a_at(n), b(n), c_at(n)}; }
};

/// Finite solution sequence y_0 ... y_N (start index 0).
struct Orbit {
    std::vector<Rational> values;

    std::size_t size() const { return values.size(); }
    const Rational& at(std::size_t n) const {
        if (n >= values.size())
            throw std::out_of_range("Orbit: index " + std::to_string(n) + " out of range");
        return values[n];
    }
    const Rational& operator[](std::size_t n) const { return values[n]; }

    friend bool operator==(const Orbit&, const Orbit&) = default;
};

/// Forward iteration from the seeds y_0, y_1 through index last. The result
/// satisfies the recurrence exactly at every interior index.
inline Orbit iterate(const RecurrenceSpec& spec, const Rational& y0, const Rational& y1,
                     std::size_t last) {
    Orbit orbit;
    orbit.values.reserve(last + 1);
    orbit.values.push_back(y0);
    if (last >= 1) orbit.values.push_back(y1);
    for (std::size_t n = 2; n <= last; ++n) {
        auto k = spec.at(n - 2);
        orbit.values.push_back(-(k.b * orbit.values[n - 1] + k.c * orbit.values[n - 2]) / k.a);
    }
    return orbit;
}

namespace detail {

inline void require_solution(const RecurrenceSpec& spec, const Orbit& f, std::size_t last) {
    for (std::size_t n = 0; n + 2 <= last; ++n) {
        auto k = spec.at(n);
        if (!(k.a * f.at(n + 2) + k.b * f.at(n + 1) + k.c * f.at(n)).is_zero())
            throw std::invalid_argument(
                "dalembert_second: the given orbit does not satisfy the recurrence at n = " +
                std::to_string(n));
    }
}

}  // namespace detail

/// Second solution by reduction of order from a known nonvanishing solution f:
///
///   y_n = f_1 f_n * sum_{k=1}^{n-1} (f_k f_{k+1})^{-1} prod_{l=0}^{k-1} c_l/a_l
///
/// Entries 0 and 1 are exact zeros (empty sum); the overall free factors are
/// fixed by this normalization and callers rescale if needed. From index 1 on
/// the orbit coincides with a genuine solution (it satisfies the recurrence
/// at every index n >= 1; entry 0 stays the conventional zero instead of the
/// backward extension -a_0 y_2 / c_0). Requires f to satisfy the recurrence
/// (checked by substitution) and f_k != 0 for k <= last.
inline Orbit dalembert_second(const RecurrenceSpec& spec, const Orbit& f, std::size_t last) {
    if (f.size() < last + 1)
        throw std::invalid_argument("dalembert_second: first solution orbit is too short");
    detail::require_solution(spec, f, last);
    for (std::size_t k = 0; k <= last; ++k)
        if (f.at(k).is_zero())
            throw std::invalid_argument("dalembert_second: f_k vanishes at k = " +
                                        std::to_string(k));

    Orbit out;
    out.values.reserve(last + 1);
    out.values.push_back(Rational(0));
    if (last >= 1) out.values.push_back(Rational(0));

    Rational ratio_product(1);  // prod_{l=0}^{k-1} c_l/a_l
    Rational sum(0);            // sum_{k=1}^{n-1} ratio_product / (f_k f_{k+1})
    for (std::size_t n = 2; n <= last; ++n) {
        const std::size_t k = n - 1;  // newly included summand
        auto co = spec.at(k - 1);
        ratio_product *= co.c / co.a;
        sum += ratio_product / (f.at(k) * f.at(k + 1));
        out.values.push_back(f.at(1) * f.at(n) * sum);
    }
    return out;
}

/// Rescaling of the recurrence to the two-term form
///
///   Y_{n+2} = beta_n Y_{n+1} + gamma_n Y_n,
///   beta_n = -b_n,  gamma_n = -a_{n-1} c_n  (with a_{-1} = 1),
///
/// via y_n = prefactor_n * Y_n where prefactor_n = prod_{l=0}^{n-2} 1/a_l.
struct YForm {
    Orbit prefactor;               // entries 0..last
    std::vector<Rational> beta;    // entries 0..last
    std::vector<Rational> gamma;   // entries 0..last; gamma_0 = -c_0
};

inline YForm transform_to_y(const RecurrenceSpec& spec, std::size_t last) {
    YForm out;
    out.prefactor.values.reserve(last + 1);
    out.beta.reserve(last + 1);
    out.gamma.reserve(last + 1);
    Rational pref(1);
    for (std::size_t n = 0; n <= last; ++n) {
        if (n >= 2) pref /= spec.a_at(n - 2);
        out.prefactor.values.push_back(pref);
        out.beta.push_back(-spec.b(n));
        Rational a_prev = (n == 0) ? Rational(1) : spec.a_at(n - 1);
        out.gamma.push_back(-(a_prev * spec.c_at(n)));
    }
    return out;
}

/// True iff the rescaled sequence Y_n = y_n * prod_{l=0}^{n-2} a_l satisfies
/// Y_{n+2} + b_n Y_{n+1} + a_{n-1} c_n Y_n = 0 at every index n >= 1.
///
/// Index 0 is excluded: entry 0 of a reduction-of-order orbit is the
/// empty-sum zero rather than the backward extension of the solution, so no
/// nontrivial orbit with two zero seeds can satisfy the relation there
/// (substitution at index 0 reduces to c_0 != 0).
inline bool verify_y_form(const RecurrenceSpec& spec, const Orbit& y) {
    if (y.size() < 4) return true;
    std::vector<Rational> big;
    big.reserve(y.size());
    Rational scale(1);
    for (std::size_t n = 0; n < y.size(); ++n) {
        if (n >= 2) scale *= spec.a_at(n - 2);
        big.push_back(y.at(n) * scale);
    }
    for (std::size_t n = 1; n + 2 < y.size(); ++n) {
        if (!(big[n + 2] + spec.b(n) * big[n + 1] + spec.a_at(n - 1) * spec.c_at(n) * big[n])
                 .is_zero())
            return false;
    }
    return true;
}

/// Casorati determinant of a pair of sequences at consecutive indices:
/// f(n) g(n+1) - g(n) f(n+1). Nonzero iff the pair is independent there.
inline Rational casorati(const Orbit& f, const Orbit& g, std::size_t n) {
    return f.at(n) * g.at(n + 1) - g.at(n) * f.at(n + 1);
}

/// Closed form of the fundamental-pair Casoratian for the two-term form:
/// (-1)^{n+1} prod_{l=0}^{n} gamma_l.
inline Rational casorati_gamma_product(std::span<const Rational> gamma, std::size_t n) {
    if (n >= gamma.size())
        throw std::out_of_range("casorati_gamma_product: gamma sequence too short");
    Rational acc((n + 1) % 2 == 0 ? 1 : -1);  // (-1)^{n+1}
    for (std::size_t l = 0; l <= n; ++l) acc *= gamma[l];
    return acc;
}

/// Constant-coefficient solution Y_n of Y_{n+2} = beta Y_{n+1} + gamma Y_n via
/// the binomial double sum (no characteristic roots):
///
///   Y_n = Y_1 sum_{k=0}^{floor((n-1)/2)} C(n-1-k, k) beta^{n-2k-1} gamma^k
///       + Y_0 sum_{k=0}^{floor(n/2)-1}   C(n-2-k, k) beta^{n-2k-2} gamma^{k+1}
inline Rational const_coeff_y(const Rational& beta, const Rational& gamma, const Rational& y0,
                              const Rational& y1, std::size_t n) {
    if (n == 0) return y0;
    const long m = static_cast<long>(n);
    Rational first(0);
    for (long k = 0; 2 * k + 1 <= m; ++k)
        first += binomial(m - 1 - k, k) * pow(beta, m - 2 * k - 1) * pow(gamma, k);
    Rational second(0);
    for (long k = 0; 2 * k + 2 <= m; ++k)
        second += binomial(m - 2 - k, k) * pow(beta, m - 2 * k - 2) * pow(gamma, k + 1);
    return y1 * first + y0 * second;
}

/// Divided difference (r1^n - r2^n)/(r1 - r2) of the characteristic roots,
/// computed radical-free as
///
///   2^{1-n} sum_l C(n, 2l+1) beta^{n-2l-1} (beta^2 + 4 gamma)^l.
///
/// Satisfies Y_n = ratio(n) Y_1 + gamma ratio(n-1) Y_0; ratio(0) = 0.
inline Rational root_power_ratio(const Rational& beta, const Rational& gamma, std::size_t n) {
    if (n == 0) return Rational(0);
    const long m = static_cast<long>(n);
    Rational disc = beta * beta + Rational(4) * gamma;
    Rational sum(0);
    for (long l = 0; 2 * l + 1 <= m; ++l)
        sum += binomial(m, 2 * l + 1) * pow(beta, m - 2 * l - 1) * pow(disc, l);
    return sum / pow(Rational(2), n - 1);
}

/// The built-in example recurrences, selectable by name from the CLI.
struct NamedExample {
    std::string name;
    RecurrenceSpec spec;
    Rational f0, f1;  // seeds of the canonical first solution
};

inline std::vector<NamedExample> named_examples() {
    std::vector<NamedExample> out;
    // Constant coefficients with a double characteristic root r = 1.
    out.push_back({"double-root",
                   {[](std::size_t) { return Rational(1); },
                    [](std::size_t) { return Rational(-2); },
                    [](std::size_t) { return Rational(1); }},
                   Rational(1),
                   Rational(1)});
    // y_{n+2} - (n+1) y_{n+1} - (n+1) y_n = 0; first solution n!.
    out.push_back({"factorial",
                   {[](std::size_t) { return Rational(1); },
                    [](std::size_t n) { return Rational(-(static_cast<long>(n) + 1)); },
                    [](std::size_t n) { return Rational(-(static_cast<long>(n) + 1)); }},
                   Rational(1),
                   Rational(1)});
    // (n+2) y_{n+2} - (2n+3) y_{n+1} + (n+1) y_n = 0; first solution constant.
    out.push_back({"harmonic",
                   {[](std::size_t n) { return Rational(static_cast<long>(n) + 2); },
                    [](std::size_t n) { return Rational(-(2 * static_cast<long>(n) + 3)); },
                    [](std::size_t n) { return Rational(static_cast<long>(n) + 1); }},
                   Rational(1),
                   Rational(1)});
    // (n+1) y_{n+2} - (n^2+7n+8) y_{n+1} + 2(n+2)(n+3) y_n = 0; first solution 2^n.
    out.push_back({"ex4",
                   {[](std::size_t n) { return Rational(static_cast<long>(n) + 1); },
                    [](std::size_t n) {
                        long m = static_cast<long>(n);
                        return Rational(-(m * m + 7 * m + 8));
                    },
                    [](std::size_t n) {
                        long m = static_cast<long>(n);
                        return Rational(2 * (m + 2) * (m + 3));
                    }},
                   Rational(1),
                   Rational(2)});
    return out;
}

}  // namespace secondkind
