#pragma once

#include <json.hpp>

#include <string>

#include "secondkind/bezout.hpp"
#include "secondkind/chg.hpp"
#include "secondkind/laurent.hpp"
#include "secondkind/poly.hpp"
#include "secondkind/pqpoly.hpp"
#include "secondkind/rational.hpp"
#include "secondkind/recurrence.hpp"
#include "secondkind/series.hpp"

namespace secondkind {

/// Pinned wire formats. All numbers travel as decimal strings so values
/// survive arbitrary precision; ordered_json keeps field order (and thus the
/// emitted bytes) deterministic.
using json = nlohmann::ordered_json;

/// {"num": "p", "den": "q"}
inline json to_json(const Rational& r) {
    return json{{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

inline Rational rational_from_json(const json& j) {
    return Rational(mpz_class(j.at("num").get<std::string>()),
                    mpz_class(j.at("den").get<std::string>()));
}

/// [[exponent, "num", "den"], ...] for the nonzero coefficients, sorted by
/// descending exponent. The zero polynomial is [].
inline json to_json(const DensePoly& p) {
    json arr = json::array();
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        arr.push_back(json::array(
            {i, c[i].numerator().get_str(), c[i].denominator().get_str()}));
    }
    return arr;
}

inline DensePoly poly_from_json(const json& j) {
    DensePoly p;
    for (const auto& entry : j) {
        std::size_t e = entry.at(0).get<std::size_t>();
        p.add_term(e, Rational(mpz_class(entry.at(1).get<std::string>()),
                               mpz_class(entry.at(2).get<std::string>())));
    }
    return p;
}

/// Orbits travel as arrays of rational objects.
inline json to_json(const Orbit& o) {
    json arr = json::array();
    for (const auto& v : o.values) arr.push_back(to_json(v));
    return arr;
}

inline Orbit orbit_from_json(const json& j) {
    Orbit o;
    for (const auto& entry : j) o.values.push_back(rational_from_json(entry));
    return o;
}

/// {"kind": "P", "order": n, "words": [["b0","g(1,2)"], ...]}
inline json to_json(const PQPoly& p) {
    json words = json::array();
    for (const auto& w : p.words) {
        json toks = json::array();
        for (const auto& t : token_strings(w, p.base_index())) toks.push_back(t);
        words.push_back(std::move(toks));
    }
    return json{{"kind", p.kind == PQPoly::Kind::P ? "P" : "Q"},
                {"order", p.order},
                {"words", std::move(words)}};
}

inline json to_json(const LaurentLogExpansion& e) {
    json pole = json::array();
    for (const auto& [exp, c] : e.pole_part()) pole.push_back(json{{"exp", exp}, {"coeff", to_json(c)}});
    json regular = json::array();
    for (const auto& [exp, v] : e.regular_part())
        regular.push_back(json{{"exp", exp}, {"rational", to_json(v.rational)}, {"gamma", to_json(v.gamma)}});
    json log = json::array();
    for (const auto& [exp, c] : e.log_part()) log.push_back(json{{"exp", exp}, {"coeff", to_json(c)}});
    return json{{"order", e.truncation_order()},
                {"pole", std::move(pole)},
                {"regular", std::move(regular)},
                {"log", std::move(log)}};
}

inline json to_json(const ChgParams& p) { return json{{"N", p.N}, {"n", p.n}}; }

inline json to_json(const ExpansionReport& r) {
    json j{{"params", to_json(r.params)}, {"order", r.order}, {"equal", r.equal}};
    if (r.first_mismatch) {
        j["first_mismatch"] = json{{"channel", r.first_mismatch->channel},
                                   {"exponent", r.first_mismatch->exponent},
                                   {"lhs", r.first_mismatch->lhs},
                                   {"rhs", r.first_mismatch->rhs}};
    }
    return j;
}

/// {params, s, t, degree_s, degree_t, identity_holds, c}
inline json bezout_report_json(ChgParams p) {
    BezoutPair pair = bezout_phi(p);
    json j{{"params", to_json(p)}, {"s", to_json(pair.s)}, {"t", to_json(pair.t)}};
    j["degree_s"] = pair.s.is_zero() ? json(nullptr) : json(*pair.s.degree());
    j["degree_t"] = pair.t.is_zero() ? json(nullptr) : json(*pair.t.degree());
    j["identity_holds"] = cancellation_identity(p);
    j["c"] = to_json(cancellation_constant(p));
    return j;
}

}  // namespace secondkind
