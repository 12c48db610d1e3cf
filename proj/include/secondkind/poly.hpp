#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "secondkind/rational.hpp"

namespace secondkind {

/// Univariate polynomial over Rational with dense ascending-exponent storage.
///
/// Canonical form: no trailing zero coefficients, so equality is structural.
/// The zero polynomial stores nothing; its degree is "no degree" (nullopt),
/// the conventional minus-infinity marker.
class DensePoly {
public:
    DensePoly() = default;
    DensePoly(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }
    explicit DensePoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static DensePoly constant(const Rational& c) {
        DensePoly p;
        if (!c.is_zero()) p.c_.push_back(c);
        return p;
    }
    static DensePoly monomial(const Rational& c, std::size_t e) {
        DensePoly p;
        if (!c.is_zero()) {
            p.c_.assign(e + 1, Rational(0));
            p.c_[e] = c;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    const Rational& leading_coefficient() const {
        if (c_.empty()) throw std::domain_error("DensePoly: zero polynomial has no leading coefficient");
        return c_.back();
    }
    Rational coefficient(std::size_t e) const {
        return e < c_.size() ? c_[e] : Rational(0);
    }
    /// Ascending coefficients; the last entry is nonzero unless empty.
    const std::vector<Rational>& coefficients() const { return c_; }

    void add_term(std::size_t e, const Rational& c) {
        if (c.is_zero()) return;
        if (e >= c_.size()) c_.resize(e + 1, Rational(0));
        c_[e] += c;
        trim();
    }

    DensePoly& operator+=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    DensePoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator-(const DensePoly& a) {
        DensePoly r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend DensePoly operator*(DensePoly a, const Rational& s) { return a *= s; }
    friend DensePoly operator*(const Rational& s, DensePoly a) { return a *= s; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return DensePoly();
        std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(prod));
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return a.c_ != b.c_; }

    /// Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

private:
    std::vector<Rational> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

inline DensePoly derivative(const DensePoly& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return DensePoly();
    std::vector<Rational> d(c.size() - 1, Rational(0));
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Rational(static_cast<long>(i));
    return DensePoly(std::move(d));
}

/// Euclidean division: returns (quotient, remainder) with
/// p = q*quotient + remainder and deg(remainder) < deg(q).
inline std::pair<DensePoly, DensePoly> divrem(const DensePoly& p, const DensePoly& q) {
    if (q.is_zero()) throw std::domain_error("divrem: division by the zero polynomial");
    DensePoly rem = p;
    DensePoly quot;
    const std::size_t dq = *q.degree();
    const Rational& lq = q.leading_coefficient();
    while (!rem.is_zero() && *rem.degree() >= dq) {
        const std::size_t dr = *rem.degree();
        Rational factor = rem.leading_coefficient() / lq;
        DensePoly term = DensePoly::monomial(factor, dr - dq);
        quot += term;
        rem -= term * q;
    }
    return {quot, rem};
}

/// Truncated exponential: sum of x^k/k! for 0 <= k <= M.
inline DensePoly exp_truncated(std::size_t M) {
    std::vector<Rational> c(M + 1, Rational(0));
    Rational term(1);
    c[0] = term;
    for (std::size_t k = 1; k <= M; ++k) {
        term /= Rational(static_cast<long>(k));
        c[k] = term;
    }
    return DensePoly(std::move(c));
}

/// Descending-power rendering: "x^2 - 5x + 2", "-x^3 + 3x^2 + 2x + 2", "0".
/// Integer coefficients are printed bare; non-integer ones parenthesized,
/// e.g. "(1/6)x^2". Unit coefficients are omitted except in the constant term.
inline std::string to_text(const DensePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        const bool first = out.empty();
        const bool neg = c[i].sign() < 0;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        Rational mag = abs(c[i]);
        if (i == 0) {
            out += mag.to_string();
        } else {
            if (mag != Rational(1))
                out += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace secondkind
