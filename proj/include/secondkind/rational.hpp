#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace secondkind {

/// Exact rational scalar backed by GMP.
///
/// Always canonical: denominator > 0, gcd(|numerator|, denominator) = 1,
/// and zero is stored as 0/1. Values are immutable-by-convention plain
/// values; all operations are pure and safe to use concurrently.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& num, const mpz_class& den = 1) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p" or "p/q" with decimal integers.
    static Rational from_string(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(mpz_class(text));
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        return Rational(num, den);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// "p" when the value is an integer, otherwise "p/q".
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// base^e for e >= 0; 0^0 = 1.
inline Rational pow(const Rational& base, unsigned long e) {
    Rational acc(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline mpz_class factorial_int(unsigned long m) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    return f;
}

/// m! (integer valued; returned as the universal scalar type).
inline Rational factorial(unsigned long m) { return Rational(factorial_int(m)); }

inline Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

/// Rising product a(a+1)...(a+k-1); the empty product (k = 0) is 1.
inline Rational pochhammer(const Rational& a, unsigned long k) {
    Rational acc(1);
    Rational term = a;
    for (unsigned long i = 0; i < k; ++i) {
        acc *= term;
        term += Rational(1);
    }
    return acc;
}

/// Sum of 1/k over lo <= k <= hi. An empty range (hi < lo) gives 0.
inline Rational harmonic_range(long lo, long hi) {
    if (lo < 1) throw std::domain_error("harmonic_range: lower limit must be >= 1");
    Rational acc(0);
    for (long k = lo; k <= hi; ++k) acc += Rational(1, k);
    return acc;
}

}  // namespace secondkind
