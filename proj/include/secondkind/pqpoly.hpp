#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "secondkind/rational.hpp"

namespace secondkind {

/// Formal polynomials P_n, Q_n in the indexed symbols beta_i and
/// gamma_{i,i+1} that express the iterated two-term recurrence
/// Y_{n+2} = beta_n Y_{n+1} + gamma_n Y_n as
///
///   Y_{n+1} = P_n Y_1 + gamma_{-1,0} Q_{n-1} Y_0.
///
/// A word is a token sequence over {B, G} read left to right against a run
/// of index slots: B consumes one slot (a beta factor), G consumes two
/// adjacent slots (a gamma_{i,i+1} factor). P_n uses slots 0..n-1, Q_n uses
/// slots 1..n. Words are kept in lexicographic token order with B < G, which
/// fixes the enumeration and all rendered output.

enum class Token : unsigned char { B, G };

struct BetaGammaWord {
    std::vector<Token> tokens;

    friend bool operator==(const BetaGammaWord&, const BetaGammaWord&) = default;
};

struct PQPoly {
    enum class Kind { P, Q };

    Kind kind = Kind::P;
    std::size_t order = 0;
    std::vector<BetaGammaWord> words;

    std::size_t base_index() const { return kind == Kind::Q ? 1 : 0; }

    friend bool operator==(const PQPoly&, const PQPoly&) = default;
};

namespace detail {

// Lexicographic (B < G) enumeration of all words filling exactly n slots.
inline std::vector<std::vector<BetaGammaWord>> words_up_to(std::size_t n) {
    std::vector<std::vector<BetaGammaWord>> table(n + 1);
    table[0] = {BetaGammaWord{}};
    if (n >= 1) table[1] = {BetaGammaWord{{Token::B}}};
    for (std::size_t k = 2; k <= n; ++k) {
        auto& out = table[k];
        out.reserve(table[k - 1].size() + table[k - 2].size());
        for (const auto& w : table[k - 1]) {
            BetaGammaWord e{{Token::B}};
            e.tokens.insert(e.tokens.end(), w.tokens.begin(), w.tokens.end());
            out.push_back(std::move(e));
        }
        for (const auto& w : table[k - 2]) {
            BetaGammaWord e{{Token::G}};
            e.tokens.insert(e.tokens.end(), w.tokens.begin(), w.tokens.end());
            out.push_back(std::move(e));
        }
    }
    return table;
}

}  // namespace detail

inline PQPoly build_p(std::size_t n) {
    return PQPoly{PQPoly::Kind::P, n, detail::words_up_to(n)[n]};
}

inline PQPoly build_q(std::size_t n) {
    return PQPoly{PQPoly::Kind::Q, n, detail::words_up_to(n)[n]};
}

/// Value of one word. The single-index gamma sequence is aligned so that
/// gamma[j] = gamma_{j-1,j}; a G token occupying slots (i, i+1) therefore
/// reads gamma[i+1], and gamma[0] is the gamma_{-1,0} prefactor slot.
inline Rational evaluate_word(const BetaGammaWord& word, std::size_t base_index,
                              std::span<const Rational> beta, std::span<const Rational> gamma) {
    Rational prod(1);
    std::size_t slot = base_index;
    for (Token t : word.tokens) {
        if (t == Token::B) {
            if (slot >= beta.size())
                throw std::out_of_range("evaluate: beta index " + std::to_string(slot) +
                                        " not covered");
            prod *= beta[slot];
            slot += 1;
        } else {
            if (slot + 1 >= gamma.size())
                throw std::out_of_range("evaluate: gamma index " + std::to_string(slot + 1) +
                                        " not covered");
            prod *= gamma[slot + 1];
            slot += 2;
        }
    }
    return prod;
}

inline Rational evaluate(const PQPoly& p, std::span<const Rational> beta,
                         std::span<const Rational> gamma) {
    Rational sum(0);
    for (const auto& w : p.words) sum += evaluate_word(w, p.base_index(), beta, gamma);
    return sum;
}

/// Y_{n+1} assembled as P_n Y_1 + gamma[0] Q_{n-1} Y_0. For n = 0 this is
/// just Y_1 (P_0 is the empty word and the Q term is absent).
inline Rational assemble_y(std::size_t n, const Rational& y0, const Rational& y1,
                           std::span<const Rational> beta, std::span<const Rational> gamma) {
    if (n == 0) return y1;
    if (gamma.empty()) throw std::out_of_range("assemble_y: gamma index 0 not covered");
    return evaluate(build_p(n), beta, gamma) * y1 +
           gamma[0] * evaluate(build_q(n - 1), beta, gamma) * y0;
}

/// Token strings of one word: "b2" for a beta factor at slot 2, "g(1,2)" for
/// a gamma factor across slots 1 and 2.
inline std::vector<std::string> token_strings(const BetaGammaWord& word, std::size_t base_index) {
    std::vector<std::string> out;
    std::size_t slot = base_index;
    for (Token t : word.tokens) {
        if (t == Token::B) {
            out.push_back("b" + std::to_string(slot));
            slot += 1;
        } else {
            out.push_back("g(" + std::to_string(slot) + "," + std::to_string(slot + 1) + ")");
            slot += 2;
        }
    }
    return out;
}

inline std::string to_text(const BetaGammaWord& word, std::size_t base_index) {
    auto toks = token_strings(word, base_index);
    if (toks.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i) out += " ";
        out += toks[i];
    }
    return out;
}

inline std::string to_text(const PQPoly& p) {
    if (p.words.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.words.size(); ++i) {
        if (i) out += " + ";
        out += to_text(p.words[i], p.base_index());
    }
    return out;
}

}  // namespace secondkind
