#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "secondkind/rational.hpp"

namespace secondkind {

/// Regular-part value of the form r + g*eulergamma, with the Euler constant
/// kept as an exact formal basis element.
struct GammaValue {
    Rational rational;
    Rational gamma;

    friend bool operator==(const GammaValue&, const GammaValue&) = default;
};

/// Truncated Laurent expansion with a separate ln-x coefficient channel,
/// for x > 0:
///
///   sum_j pole[-j] x^-j  +  sum_k (r_k + g_k*eulergamma) x^k
///                        +  sum_k log[k] x^k ln x
///
/// The finite pole part is exact; the regular and log channels are kept
/// through x^order. Zero components are never stored, so componentwise
/// equality is structural.
class LaurentLogExpansion {
public:
    explicit LaurentLogExpansion(long order) : order_(order) {
        if (order < 0) throw std::domain_error("LaurentLogExpansion: negative truncation order");
    }

    long truncation_order() const { return order_; }

    void add_pole(long exponent, const Rational& c) {
        if (exponent >= 0) throw std::out_of_range("pole exponent must be negative");
        accumulate(pole_, exponent, c);
    }
    void add_regular(long k, const Rational& r, const Rational& g = Rational(0)) {
        check_regular_exponent(k);
        auto it = regular_.find(k);
        if (it == regular_.end()) {
            if (!r.is_zero() || !g.is_zero()) regular_.emplace(k, GammaValue{r, g});
            return;
        }
        it->second.rational += r;
        it->second.gamma += g;
        if (it->second.rational.is_zero() && it->second.gamma.is_zero()) regular_.erase(it);
    }
    void add_log(long k, const Rational& c) {
        check_regular_exponent(k);
        accumulate(log_, k, c);
    }

    Rational pole(long exponent) const { return lookup(pole_, exponent); }
    GammaValue regular(long k) const {
        auto it = regular_.find(k);
        return it == regular_.end() ? GammaValue{Rational(0), Rational(0)} : it->second;
    }
    Rational log_at(long k) const { return lookup(log_, k); }

    const std::map<long, Rational>& pole_part() const { return pole_; }
    const std::map<long, GammaValue>& regular_part() const { return regular_; }
    const std::map<long, Rational>& log_part() const { return log_; }

    LaurentLogExpansion& operator+=(const LaurentLogExpansion& o) {
        if (o.order_ < order_) {
            // Adding a shorter expansion truncates the result.
            order_ = o.order_;
            regular_.erase(regular_.upper_bound(order_), regular_.end());
            log_.erase(log_.upper_bound(order_), log_.end());
        }
        for (const auto& [e, c] : o.pole_) add_pole(e, c);
        for (const auto& [k, v] : o.regular_)
            if (k <= order_) add_regular(k, v.rational, v.gamma);
        for (const auto& [k, c] : o.log_)
            if (k <= order_) add_log(k, c);
        return *this;
    }
    friend LaurentLogExpansion operator+(LaurentLogExpansion a, const LaurentLogExpansion& b) {
        return a += b;
    }
    friend LaurentLogExpansion operator-(const LaurentLogExpansion& a) {
        LaurentLogExpansion r(a.order_);
        for (const auto& [e, c] : a.pole_) r.pole_.emplace(e, -c);
        for (const auto& [k, v] : a.regular_) r.regular_.emplace(k, GammaValue{-v.rational, -v.gamma});
        for (const auto& [k, c] : a.log_) r.log_.emplace(k, -c);
        return r;
    }
    friend LaurentLogExpansion operator-(LaurentLogExpansion a, const LaurentLogExpansion& b) {
        return a += -b;
    }

private:
    std::map<long, Rational> pole_;
    std::map<long, GammaValue> regular_;
    std::map<long, Rational> log_;
    long order_;

    void check_regular_exponent(long k) const {
        if (k < 0) throw std::out_of_range("regular/log exponent must be >= 0");
        if (k > order_) throw std::out_of_range("exponent above truncation order");
    }
    static void accumulate(std::map<long, Rational>& m, long key, const Rational& c) {
        if (c.is_zero()) return;
        auto it = m.find(key);
        if (it == m.end()) {
            m.emplace(key, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
    static Rational lookup(const std::map<long, Rational>& m, long key) {
        auto it = m.find(key);
        return it == m.end() ? Rational(0) : it->second;
    }
};

/// One differing component between two expansions. lhs/rhs are the rendered
/// component values; channel is "pole", "log", "regular" (rational part) or
/// "gamma" (eulergamma part).
struct ExpansionMismatch {
    std::string channel;
    long exponent = 0;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const ExpansionMismatch&, const ExpansionMismatch&) = default;
};

/// Componentwise comparison up to min(truncation orders). The scan order is
/// fixed and deterministic: pole channel by ascending exponent, then the log
/// channel, then the regular channel (rational component before the
/// eulergamma component at each exponent).
inline std::optional<ExpansionMismatch> first_difference(const LaurentLogExpansion& a,
                                                         const LaurentLogExpansion& b) {
    const long order = std::min(a.truncation_order(), b.truncation_order());
    long lowest = 0;
    if (!a.pole_part().empty()) lowest = std::min(lowest, a.pole_part().begin()->first);
    if (!b.pole_part().empty()) lowest = std::min(lowest, b.pole_part().begin()->first);
    for (long e = lowest; e < 0; ++e)
        if (a.pole(e) != b.pole(e))
            return ExpansionMismatch{"pole", e, a.pole(e).to_string(), b.pole(e).to_string()};
    for (long k = 0; k <= order; ++k)
        if (a.log_at(k) != b.log_at(k))
            return ExpansionMismatch{"log", k, a.log_at(k).to_string(), b.log_at(k).to_string()};
    for (long k = 0; k <= order; ++k) {
        GammaValue va = a.regular(k), vb = b.regular(k);
        if (va.rational != vb.rational)
            return ExpansionMismatch{"regular", k, va.rational.to_string(), vb.rational.to_string()};
        if (va.gamma != vb.gamma)
            return ExpansionMismatch{"gamma", k, va.gamma.to_string(), vb.gamma.to_string()};
    }
    return std::nullopt;
}

inline bool componentwise_equal(const LaurentLogExpansion& a, const LaurentLogExpansion& b) {
    return !first_difference(a, b).has_value();
}

}  // namespace secondkind
