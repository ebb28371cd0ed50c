#pragma once

/**
 * @file corpus.hpp
 * @brief Deterministic lists of (ring, expansions) instances for the verifier.
 *
 * A corpus file has one instance per line:
 *
 *     # comment
 *     Z12
 *     Z4[x]/(x^3) ; d0 ; d+((2,x))
 *
 * A line holding only a ring gets the default expansion catalog.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dni/dsl.hpp"
#include "dni/predicates.hpp"

namespace dni {

struct CorpusEntry {
    RingSpec ring;
    std::vector<ExpansionRecipe> expansions;  // empty: default catalog
};

struct Corpus {
    std::vector<CorpusEntry> entries;
};

/// d0, d1, full, d+(J) for every proper J, d*(P) for every nonzero P, then d1 o d+(sqrt(0)).
inline std::vector<ExpansionRecipe> catalog_recipes(const IdealLattice& L) {
    std::vector<ExpansionRecipe> out = {ExpansionRecipe::d0(), ExpansionRecipe::d1(), ExpansionRecipe::full()};
    for (const auto& J : L)
        if (J.is_proper()) out.push_back(ExpansionRecipe::plus(J.generator_exprs()));
    for (const auto& P : L)
        if (!P.is_zero()) out.push_back(ExpansionRecipe::star(P.generator_exprs()));
    auto nil = nilradical(L.ring());
    out.push_back(ExpansionRecipe::compose(ExpansionRecipe::d1(), ExpansionRecipe::plus(nil.generator_exprs())));
    return out;
}

/// Catalog expansions without the composite entry for claims over the basic family.
inline std::vector<ExpansionRecipe> basic_catalog_recipes(const IdealLattice& L) {
    auto out = catalog_recipes(L);
    out.pop_back();
    return out;
}

inline Corpus builtin_corpus() {
    auto Z = [](std::int64_t n) { return RingSpec::modular_ring(n); };
    Corpus c;
    auto add = [&](RingSpec r) { c.entries.push_back({std::move(r), {}}); };
    for (std::int64_t n = 2; n <= 16; ++n) add(Z(n));
    for (std::int64_t n : {24, 27, 32, 36, 64}) add(Z(n));
    add(RingSpec::poly_quotient_ring(Z(4), {0, 0, 1}));
    add(RingSpec::poly_quotient_ring(Z(4), {0, 0, 0, 1}));
    add(RingSpec::poly_quotient_ring(Z(2), {0, 0, 1}));
    add(RingSpec::poly_quotient_ring(Z(2), {0, 0, 0, 1}));
    add(RingSpec::poly_quotient_ring(Z(2), {1, 1, 1}));
    add(RingSpec::poly_quotient_ring(Z(3), {0, 0, 1}));
    add(RingSpec::product_ring(Z(2), Z(2)));
    add(RingSpec::product_ring(Z(4), Z(9)));
    add(RingSpec::product_ring(Z(2), Z(4)));
    add(RingSpec::idealization_ring(Z(2), Z(2)));
    add(RingSpec::idealization_ring(Z(4), Z(4)));
    add(RingSpec::idealization_ring(Z(8), RingSpec::quotient_ring(Z(8), {ElemExpr::integer(4)})));
    return c;
}

inline Corpus parse_corpus(const std::string& text) {
    Corpus c;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ';')) fields.push_back(field);
        try {
            CorpusEntry e{parse_ring(fields[0]), {}};
            for (std::size_t i = 1; i < fields.size(); ++i) e.expansions.push_back(parse_expansion(fields[i]));
            c.entries.push_back(std::move(e));
        } catch (const ParseError& err) {
            throw AlgebraError(Errc::parse_error, "corpus line " + std::to_string(lineno) + ": " + err.diagnostic().to_string());
        }
    }
    return c;
}

inline Corpus load_corpus(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw AlgebraError(Errc::invalid_spec, "cannot read corpus file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_corpus(ss.str());
}

inline std::string format_corpus(const Corpus& c) {
    std::string out;
    for (const auto& e : c.entries) {
        out += to_string(e.ring);
        for (const auto& x : e.expansions) out += " ; " + to_string(x);
        out += "\n";
    }
    return out;
}

}  // namespace dni
