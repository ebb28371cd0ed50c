#pragma once

/**
 * @file spec.hpp
 * @brief Construction recipes for rings and elements, and their canonical text form.
 *
 * A recipe is plain data. Binding a recipe to arithmetic happens in ring.hpp
 * and constructions.hpp; parsing the text form happens in dsl.hpp. The
 * printers here produce exactly the syntax the parser accepts.
 */

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace dni {

/// Unbound element literal: an integer polynomial in x, a pair, or a fraction.
struct ElemExpr {
    enum class Kind { poly, pair, frac };

    Kind kind = Kind::poly;
    std::vector<std::int64_t> coeffs;  // poly: ascending powers of x
    std::vector<ElemExpr> parts;       // pair/frac: exactly two

    static ElemExpr integer(std::int64_t v) { return ElemExpr{Kind::poly, {v}, {}}; }
    static ElemExpr polynomial(std::vector<std::int64_t> c) { return ElemExpr{Kind::poly, std::move(c), {}}; }
    static ElemExpr pair(ElemExpr a, ElemExpr b) { return ElemExpr{Kind::pair, {}, {std::move(a), std::move(b)}}; }
    static ElemExpr frac(ElemExpr a, ElemExpr b) { return ElemExpr{Kind::frac, {}, {std::move(a), std::move(b)}}; }

    /// Drops trailing zero coefficients so equal polynomials compare equal.
    ElemExpr normalized() const {
        ElemExpr e = *this;
        if (e.kind == Kind::poly) {
            while (e.coeffs.size() > 1 && e.coeffs.back() == 0) e.coeffs.pop_back();
            if (e.coeffs.empty()) e.coeffs.push_back(0);
        } else {
            for (auto& p : e.parts) p = p.normalized();
        }
        return e;
    }

    friend bool operator==(const ElemExpr& a, const ElemExpr& b) {
        auto x = a.normalized(), y = b.normalized();
        return x.kind == y.kind && x.coeffs == y.coeffs && x.parts == y.parts;
    }
};

inline std::string to_string(const ElemExpr& e);

namespace detail {

inline std::string poly_string(const std::vector<std::int64_t>& c) {
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        auto v = c[k];
        if (v == 0) continue;
        auto mag = v < 0 ? -v : v;
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? "-" : "+";
        }
        if (k == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag);
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

inline bool is_compound(const ElemExpr& e) {
    if (e.kind == ElemExpr::Kind::frac) return true;
    if (e.kind != ElemExpr::Kind::poly) return false;
    int terms = 0;
    for (auto v : e.coeffs) terms += v != 0;
    return terms > 1 || (terms == 1 && e.coeffs[0] < 0);
}

}  // namespace detail

inline std::string to_string(const ElemExpr& e) {
    switch (e.kind) {
        case ElemExpr::Kind::poly: return detail::poly_string(e.coeffs);
        case ElemExpr::Kind::pair: return "<" + to_string(e.parts[0]) + "," + to_string(e.parts[1]) + ">";
        case ElemExpr::Kind::frac: {
            auto wrap = [](const ElemExpr& x) {
                return detail::is_compound(x) ? "(" + to_string(x) + ")" : to_string(x);
            };
            return wrap(e.parts[0]) + "/" + wrap(e.parts[1]);
        }
    }
    return "?";
}

inline std::string to_string(const std::vector<ElemExpr>& gens) {
    std::string out = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ",";
        out += to_string(gens[i]);
    }
    return out + ")";
}

/**
 * Ring construction recipe.
 *
 * - modular: `modulus` holds n.
 * - poly_quotient: `children[0]` is the modular base, `poly` the modulus coefficients (ascending).
 * - product: `children[0] x children[1]`.
 * - integer: the symbolic ring of integers.
 * - quotient: `children[0]` modulo the ideal generated by `elems`.
 * - idealization: `children[0] (+) children[1]`, the second child read as a module recipe
 *   (the base itself, a quotient of the base, or a product of such).
 * - localization: `children[0]` localized at the explicit set `elems`.
 */
struct RingSpec {
    enum class Kind { modular, poly_quotient, product, integer, quotient, idealization, localization };

    Kind kind = Kind::integer;
    std::int64_t modulus = 0;
    std::vector<std::int64_t> poly;
    std::vector<RingSpec> children;
    std::vector<ElemExpr> elems;

    static RingSpec modular_ring(std::int64_t n) { return RingSpec{Kind::modular, n, {}, {}, {}}; }
    static RingSpec integers() { return RingSpec{Kind::integer, 0, {}, {}, {}}; }
    static RingSpec poly_quotient_ring(RingSpec base, std::vector<std::int64_t> f) {
        return RingSpec{Kind::poly_quotient, 0, std::move(f), {std::move(base)}, {}};
    }
    static RingSpec product_ring(RingSpec a, RingSpec b) {
        return RingSpec{Kind::product, 0, {}, {std::move(a), std::move(b)}, {}};
    }
    static RingSpec quotient_ring(RingSpec base, std::vector<ElemExpr> gens) {
        return RingSpec{Kind::quotient, 0, {}, {std::move(base)}, std::move(gens)};
    }
    static RingSpec idealization_ring(RingSpec base, RingSpec module) {
        return RingSpec{Kind::idealization, 0, {}, {std::move(base), std::move(module)}, {}};
    }
    static RingSpec localization_ring(RingSpec base, std::vector<ElemExpr> set) {
        return RingSpec{Kind::localization, 0, {}, {std::move(base)}, std::move(set)};
    }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

inline std::string to_string(const RingSpec& s);

namespace detail {

// Atoms need no parentheses as an operand of "(+)"; products and idealizations do.
inline std::string ring_operand(const RingSpec& s) {
    if (s.kind == RingSpec::Kind::product || s.kind == RingSpec::Kind::idealization)
        return "(" + to_string(s) + ")";
    return to_string(s);
}

}  // namespace detail

inline std::string to_string(const RingSpec& s) {
    using K = RingSpec::Kind;
    switch (s.kind) {
        case K::modular: return "Z" + std::to_string(s.modulus);
        case K::integer: return "ZZ";
        case K::poly_quotient:
            return to_string(s.children[0]) + "[x]/(" + detail::poly_string(s.poly) + ")";
        case K::product: {
            auto right = s.children[1].kind == K::product ? "(" + to_string(s.children[1]) + ")"
                                                          : to_string(s.children[1]);
            return to_string(s.children[0]) + " x " + right;
        }
        case K::quotient: return "quot(" + to_string(s.children[0]) + ", " + to_string(s.elems) + ")";
        case K::idealization:
            return detail::ring_operand(s.children[0]) + " (+) " + detail::ring_operand(s.children[1]);
        case K::localization: {
            std::string set = "{";
            for (std::size_t i = 0; i < s.elems.size(); ++i) {
                if (i) set += ",";
                set += to_string(s.elems[i]);
            }
            return "loc(" + to_string(s.children[0]) + ", " + set + "})";
        }
    }
    return "?";
}

}  // namespace dni
