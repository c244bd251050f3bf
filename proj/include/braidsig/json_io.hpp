#pragma once

// JSON / CSV serialization glue for the CLI and external consumers.

#include <string>

#include "json.hpp"

#include "braidsig/bounds.hpp"
#include "braidsig/braid_word.hpp"
#include "braidsig/garside.hpp"
#include "braidsig/seifert.hpp"

namespace braidsig {

inline std::string rational_to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "p/q" or a plain integer.
inline Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

inline nlohmann::json word_to_json(const BraidWord& w) {
    nlohmann::json letters = nlohmann::json::array();
    for (const Letter& l : w.letters())
        letters.push_back(nlohmann::json::array({l.index, l.sign}));
    return nlohmann::json{{"strands", w.strands()}, {"letters", letters}};
}

inline nlohmann::json invariants_to_json(const LinkInvariants& inv) {
    return nlohmann::json{
        {"b1", inv.b1}, {"c", inv.c}, {"sigma", inv.sigma}, {"nullity", inv.nullity}};
}

inline nlohmann::json normal_form_to_json(const NormalForm& nf) {
    nlohmann::json factors = nlohmann::json::array();
    for (const PermutationBraid& f : nf.factors) {
        nlohmann::json perm = nlohmann::json::array();
        for (int v : f) perm.push_back(v + 1);
        factors.push_back(perm);
    }
    return nlohmann::json{{"strands", nf.strands},
                          {"inf", nf.inf},
                          {"factors", factors},
                          {"canonical", nf.canonical()}};
}

/// Matrix with basis labels "(column, k)", k the 1-based index of the brick
/// within its column.
inline nlohmann::json seifert_to_json(const SeifertMatrix& sm) {
    nlohmann::json basis = nlohmann::json::array();
    int prev_column = 0;
    int k = 0;
    for (const Brick& brick : sm.basis) {
        k = (brick.column == prev_column) ? k + 1 : 1;
        prev_column = brick.column;
        basis.push_back("(" + std::to_string(brick.column) + ", " + std::to_string(k) + ")");
    }
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& row : sm.entries) entries.push_back(row);
    return nlohmann::json{{"basis", basis}, {"entries", entries}};
}

inline nlohmann::json report_to_json(const BoundReport& report) {
    nlohmann::json cex = nlohmann::json::array();
    for (const Counterexample& c : report.counterexamples)
        cex.push_back(nlohmann::json{{"word", c.word},
                                     {"l", c.length},
                                     {"b1", c.b1},
                                     {"sigma", c.sigma},
                                     {"ratio", rational_to_string(Rational(-c.sigma, c.b1))}});
    return nlohmann::json{{"strands", report.strands},
                          {"l_max", report.l_max},
                          {"bound", rational_to_string(report.bound)},
                          {"strict", report.strict},
                          {"words_checked", report.words_checked},
                          {"classes_checked", report.classes_checked},
                          {"counterexamples", cex}};
}

inline std::string report_to_csv(const BoundReport& report) {
    std::string out = "word,l,b1,sigma,ratio\n";
    for (const Counterexample& c : report.counterexamples) {
        out += "\"" + c.word + "\"," + std::to_string(c.length) + "," +
               std::to_string(c.b1) + "," + std::to_string(c.sigma) + "," +
               rational_to_string(Rational(-c.sigma, c.b1)) + "\n";
    }
    return out;
}

}  // namespace braidsig
