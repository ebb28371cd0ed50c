#pragma once

/**
 * @file dsl.hpp
 * @brief Parser for the text form of rings, elements, ideals and expansions.
 *
 * The printers live next to the data types (spec.hpp, expansion.hpp); this
 * parser accepts everything they print, so parse(to_string(x)) == x on
 * canonical recipes.
 *
 *     ring      := term { "x" term }                      left-associative
 *     term      := atom [ "(+)" atom ]
 *     atom      := "ZZ" | "Z" int [ "[x]/(" poly ")" ] | "(" ring ")"
 *                | "quot(" ring "," ideal ")" | "loc(" ring "," "{" elem { "," elem } "}" ")"
 *     ideal     := "(" [ elem { "," elem } ] ")"
 *     elem      := operand [ "/" operand ]
 *     operand   := "<" elem "," elem ">" | "(" elem ")" | poly
 *     poly      := [ "-" ] mono { ("+" | "-") mono } | "[" int { "," int } "]"
 *     mono      := int [ "*" ] [ "x" [ "^" int ] ] | "x" [ "^" int ]
 *     expansion := factor { "o" factor }                  left-associative
 *     factor    := "d0" | "d1" | "full" | "d+(" ideal ")" | "d*(" ideal ")" | "(" expansion ")"
 *
 * Coefficient lists are ascending: "[1,0,1]" is 1+x^2. Whitespace is ignored
 * between tokens.
 */

#include <algorithm>
#include <charconv>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dni/error.hpp"
#include "dni/expansion.hpp"
#include "dni/spec.hpp"

namespace dni {

struct Diagnostic {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t offset = 0;
    std::string found;
    std::vector<std::string> expected;

    std::string to_string() const {
        std::string s = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": unexpected " + found;
        if (!expected.empty()) {
            s += ", expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
        }
        return s;
    }
};

class ParseError : public AlgebraError {
public:
    explicit ParseError(Diagnostic d) : AlgebraError(Errc::parse_error, d.to_string()), diag_(std::move(d)) {}
    const Diagnostic& diagnostic() const { return diag_; }

private:
    Diagnostic diag_;
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    RingSpec ring() {
        auto r = term();
        while (accept("x")) r = RingSpec::product_ring(std::move(r), term());
        return r;
    }

    std::vector<ElemExpr> ideal() {
        expect("(");
        std::vector<ElemExpr> gens;
        if (accept(")")) return gens;
        gens.push_back(elem());
        while (accept(",")) gens.push_back(elem());
        expect(")");
        return gens;
    }

    ElemExpr elem() {
        auto a = operand();
        if (accept("/")) return ElemExpr::frac(std::move(a), operand());
        return a;
    }

    ExpansionRecipe expansion() {
        auto e = factor();
        while (accept("o")) e = ExpansionRecipe::compose(std::move(e), factor());
        return e;
    }

    void finish() {
        skip();
        if (pos_ < s_.size()) {
            note("end of input");
            fail();
        }
    }

private:
    RingSpec term() {
        auto a = atom();
        if (accept("(+)")) return RingSpec::idealization_ring(std::move(a), atom());
        return a;
    }

    RingSpec atom() {
        if (accept("ZZ")) return RingSpec::integers();
        if (accept("quot(")) {
            auto base = ring();
            expect(",");
            auto gens = ideal();
            expect(")");
            return RingSpec::quotient_ring(std::move(base), std::move(gens));
        }
        if (accept("loc(")) {
            auto base = ring();
            expect(",");
            expect("{");
            std::vector<ElemExpr> set{elem()};
            while (accept(",")) set.push_back(elem());
            expect("}");
            expect(")");
            return RingSpec::localization_ring(std::move(base), std::move(set));
        }
        if (accept("(")) {
            auto r = ring();
            expect(")");
            return r;
        }
        if (accept("Z")) {
            auto base = RingSpec::modular_ring(integer());
            if (accept("[x]/(")) {
                auto f = poly();
                expect(")");
                return RingSpec::poly_quotient_ring(std::move(base), std::move(f));
            }
            return base;
        }
        fail();
    }

    ElemExpr operand() {
        if (accept("<")) {
            auto a = elem();
            expect(",");
            auto b = elem();
            expect(">");
            return ElemExpr::pair(std::move(a), std::move(b));
        }
        if (accept("(")) {
            auto e = elem();
            expect(")");
            return e;
        }
        return ElemExpr::polynomial(poly());
    }

    std::vector<std::int64_t> poly() {
        std::vector<std::int64_t> c;
        if (accept("[")) {
            c.push_back(signed_integer());
            while (accept(",")) c.push_back(signed_integer());
            expect("]");
            return c;
        }
        bool negative = accept("-");
        monomial(c, negative);
        for (;;) {
            if (accept("+")) {
                monomial(c, false);
            } else if (accept("-")) {
                monomial(c, true);
            } else {
                break;
            }
        }
        return c;
    }

    void monomial(std::vector<std::int64_t>& c, bool negative) {
        std::int64_t coeff = 1;
        std::size_t degree = 0;
        bool has_coeff = peek_digit();
        if (has_coeff) {
            coeff = integer();
            accept("*");
        }
        if (accept("x")) {
            degree = accept("^") ? static_cast<std::size_t>(integer()) : 1;
        } else if (!has_coeff) {
            note("x");
            fail();
        }
        if (degree > 4096) throw ParseError(diag("degree " + std::to_string(degree) + " is too large"));
        if (c.size() <= degree) c.resize(degree + 1, 0);
        c[degree] += negative ? -coeff : coeff;
    }

    ExpansionRecipe factor() {
        if (accept("d0")) return ExpansionRecipe::d0();
        if (accept("d1")) return ExpansionRecipe::d1();
        if (accept("full")) return ExpansionRecipe::full();
        if (accept("d+(")) return ExpansionRecipe::plus(closed_ideal());
        if (accept("d*(")) return ExpansionRecipe::star(closed_ideal());
        if (accept("(")) {
            auto e = expansion();
            expect(")");
            return e;
        }
        fail();
    }

    std::vector<ElemExpr> closed_ideal() {
        auto g = ideal();
        expect(")");
        return g;
    }

    std::int64_t signed_integer() { return accept("-") ? -integer() : integer(); }

    std::int64_t integer() {
        if (!peek_digit()) fail();
        std::int64_t v = 0;
        auto* first = s_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
        if (ec == std::errc::result_out_of_range) throw ParseError(diag("integer out of range"));
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    bool peek_digit() {
        skip();
        bool d = pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9';
        if (!d) note("integer");
        return d;
    }

    void skip() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        note("'" + std::string(tok) + "'");
        return false;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) fail();
    }

    void note(std::string what) {
        if (pos_ > far_) {
            far_ = pos_;
            expected_.clear();
        }
        if (pos_ == far_) expected_.insert(std::move(what));
    }

    Diagnostic diag(std::string found, std::size_t at) const {
        Diagnostic d;
        d.offset = at;
        for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++d.line;
                d.column = 1;
            } else {
                ++d.column;
            }
        }
        d.found = std::move(found);
        return d;
    }
    Diagnostic diag(std::string found) const { return diag(std::move(found), pos_); }

    [[noreturn]] void fail() const {
        auto at = std::max(far_, pos_);
        std::string found = at < s_.size() ? "'" + std::string(1, s_[at]) + "'" : "end of input";
        auto d = diag(found, at);
        if (at == far_) d.expected.assign(expected_.begin(), expected_.end());
        throw ParseError(std::move(d));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t far_ = 0;
    std::set<std::string> expected_;
};

}  // namespace detail

inline RingSpec parse_ring(std::string_view text) {
    detail::Parser p(text);
    auto r = p.ring();
    p.finish();
    return r;
}

inline std::vector<ElemExpr> parse_ideal(std::string_view text) {
    detail::Parser p(text);
    auto g = p.ideal();
    p.finish();
    return g;
}

inline ElemExpr parse_element(std::string_view text) {
    detail::Parser p(text);
    auto e = p.elem();
    p.finish();
    return e;
}

inline ExpansionRecipe parse_expansion(std::string_view text) {
    detail::Parser p(text);
    auto e = p.expansion();
    p.finish();
    return e;
}

/// Ring, ideal and expansion recipes bound to a constructed ring.
inline Ideal bind_ideal(const Ring& R, std::string_view text) { return ideal_from_exprs(R, parse_ideal(text)); }

inline Expansion bind_expansion(const Ring& R, std::string_view text) { return make_expansion(R, parse_expansion(text)); }

}  // namespace dni
