#pragma once

/**
 * @file expansion.hpp
 * @brief Ideal expansions: validated ideal-to-ideal maps with a reproducible recipe.
 *
 * An expansion must satisfy I subset delta(I) and monotonicity. On finite rings
 * both axioms are checked over the whole ideal lattice when the expansion is
 * built, and the values are stored as a table indexed by lattice position.
 * Over ZZ the catalog kinds are evaluated in closed form on the generator n.
 */

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dni/constructions.hpp"
#include "dni/ideal.hpp"

namespace dni {

struct ExpansionRecipe {
    enum class Kind {
        delta0,
        delta1,
        full,
        delta_plus,
        delta_star,
        compose,
        quotient_derived,
        product_derived,
        idealization_derived,
        localization_derived,
        table,
    };

    Kind kind = Kind::delta0;
    std::vector<ElemExpr> gens;             // delta_plus / delta_star parameter, quotient J, localization S
    std::vector<ExpansionRecipe> children;  // compose: outer, inner; derived: base expansion(s)
    std::optional<RingSpec> module;         // idealization_derived

    static ExpansionRecipe d0() { return {Kind::delta0, {}, {}, {}}; }
    static ExpansionRecipe d1() { return {Kind::delta1, {}, {}, {}}; }
    static ExpansionRecipe full() { return {Kind::full, {}, {}, {}}; }
    static ExpansionRecipe plus(std::vector<ElemExpr> g) { return {Kind::delta_plus, std::move(g), {}, {}}; }
    static ExpansionRecipe star(std::vector<ElemExpr> g) { return {Kind::delta_star, std::move(g), {}, {}}; }
    static ExpansionRecipe compose(ExpansionRecipe outer, ExpansionRecipe inner) {
        return {Kind::compose, {}, {std::move(outer), std::move(inner)}, {}};
    }

    friend bool operator==(const ExpansionRecipe&, const ExpansionRecipe&) = default;
};

inline std::string to_string(const ExpansionRecipe& e) {
    using K = ExpansionRecipe::Kind;
    switch (e.kind) {
        case K::delta0: return "d0";
        case K::delta1: return "d1";
        case K::full: return "full";
        case K::delta_plus: return "d+(" + to_string(e.gens) + ")";
        case K::delta_star: return "d*(" + to_string(e.gens) + ")";
        case K::compose: {
            auto right = e.children[1].kind == K::compose ? "(" + to_string(e.children[1]) + ")"
                                                          : to_string(e.children[1]);
            return to_string(e.children[0]) + " o " + right;
        }
        case K::quotient_derived: return "q(" + to_string(e.children[0]) + ", " + to_string(e.gens) + ")";
        case K::product_derived: return "x(" + to_string(e.children[0]) + ", " + to_string(e.children[1]) + ")";
        case K::idealization_derived:
            return "i(" + to_string(e.children[0]) + ", " + (e.module ? to_string(*e.module) : "?") + ")";
        case K::localization_derived: {
            std::string s = "{";
            for (std::size_t i = 0; i < e.gens.size(); ++i) s += (i ? "," : "") + to_string(e.gens[i]);
            return "s(" + to_string(e.children[0]) + ", " + s + "})";
        }
        case K::table: return "table";
    }
    return "?";
}

class Expansion {
public:
    using Function = std::function<Ideal(const Ideal&)>;

    /// Finite rings: tabulates `fn` over the lattice and checks both axioms.
    static Expansion from_function(std::shared_ptr<const IdealLattice> L, ExpansionRecipe recipe, const Function& fn) {
        std::vector<std::size_t> table;
        table.reserve(L->size());
        for (const auto& I : *L) {
            auto v = fn(I);
            auto k = L->find(v.elements());
            if (!k) throw AlgebraError(Errc::axiom_violation, "value at " + I.to_string() + " is not an ideal");
            table.push_back(*k);
        }
        return from_table(std::move(L), std::move(recipe), std::move(table));
    }

    static Expansion from_table(std::shared_ptr<const IdealLattice> L, ExpansionRecipe recipe, std::vector<std::size_t> table) {
        if (table.size() != L->size()) throw AlgebraError(Errc::axiom_violation, "table does not cover the lattice");
        const auto& lat = *L;
        for (std::size_t i = 0; i < lat.size(); ++i) {
            if (!lat[i].subset_of(lat[table[i]]))
                throw AlgebraError(Errc::axiom_violation,
                                   dni::to_string(recipe) + ": I is not inside delta(I) at I=" + lat[i].to_string());
            for (std::size_t j = 0; j < lat.size(); ++j)
                if (lat[i].subset_of(lat[j]) && !lat[table[i]].subset_of(lat[table[j]]))
                    throw AlgebraError(Errc::axiom_violation, dni::to_string(recipe) + ": not monotone at I=" +
                                                                  lat[i].to_string() + ", J=" + lat[j].to_string());
        }
        Expansion d;
        d.ring_ = lat.ring();
        d.recipe_ = std::move(recipe);
        d.lattice_ = std::move(L);
        d.table_ = std::move(table);
        return d;
    }

    /// ZZ: closed form on the generator of nZZ.
    static Expansion integer(const Ring& Z, ExpansionRecipe recipe, std::function<std::int64_t(std::int64_t)> fn) {
        Expansion d;
        d.ring_ = Z;
        d.recipe_ = std::move(recipe);
        d.integer_fn_ = std::move(fn);
        return d;
    }

    const Ring& ring() const { return ring_; }
    const ExpansionRecipe& recipe() const { return recipe_; }
    std::string to_string() const { return dni::to_string(recipe_); }
    bool finite() const { return ring_.is_finite(); }

    const IdealLattice& lattice() const { return *lattice_; }
    const std::shared_ptr<const IdealLattice>& lattice_ptr() const { return lattice_; }
    const std::vector<std::size_t>& table() const { return table_; }
    std::size_t apply_index(std::size_t i) const { return table_[i]; }

    Ideal apply(const Ideal& I) const {
        if (!(I.ring() == ring_)) throw AlgebraError(Errc::cross_ring, "ideal of " + I.ring().key() + " given to an expansion of " + ring_.key());
        if (!finite()) return Ideal::integer_multiples(ring_, integer_fn_(I.integer_generator()));
        return (*lattice_)[table_[lattice_->index_of(I)]];
    }
    std::int64_t apply_integer(std::int64_t n) const { return integer_fn_(n); }

    /// Tablewise equality (finite rings only).
    bool same_values(const Expansion& other) const { return ring_ == other.ring_ && table_ == other.table_; }

private:
    Ring ring_;
    ExpansionRecipe recipe_;
    std::shared_ptr<const IdealLattice> lattice_;
    std::vector<std::size_t> table_;
    std::function<std::int64_t(std::int64_t)> integer_fn_;
};

inline Ideal apply_expansion(const Expansion& d, const Ideal& I) { return d.apply(I); }

namespace detail {

inline std::int64_t integer_param(const Ring& Z, const std::vector<ElemExpr>& gens) {
    return ideal_from_exprs(Z, gens).integer_generator();
}

inline std::int64_t integer_colon(std::int64_t n, std::int64_t m) {
    if (n == 0) return m == 0 ? 1 : 0;
    return n / gcd64(n, m);
}

inline Expansion make_integer_expansion(const Ring& Z, const ExpansionRecipe& r);

}  // namespace detail

inline Expansion make_expansion(const Ring& R, const ExpansionRecipe& recipe,
                                std::shared_ptr<const IdealLattice> L = nullptr);

inline Expansion compose_expansions(const Expansion& outer, const Expansion& inner) {
    if (!(outer.ring() == inner.ring())) throw AlgebraError(Errc::cross_ring, "expansions live on different rings");
    auto recipe = ExpansionRecipe::compose(outer.recipe(), inner.recipe());
    if (!outer.finite())
        return Expansion::integer(outer.ring(), recipe, [outer, inner](std::int64_t n) {
            return outer.apply_integer(inner.apply_integer(n));
        });
    std::vector<std::size_t> table;
    for (std::size_t i = 0; i < inner.table().size(); ++i) table.push_back(outer.apply_index(inner.apply_index(i)));
    return Expansion::from_table(inner.lattice_ptr(), recipe, std::move(table));
}

namespace detail {

inline Expansion make_integer_expansion(const Ring& Z, const ExpansionRecipe& r) {
    using K = ExpansionRecipe::Kind;
    switch (r.kind) {
        case K::delta0: return Expansion::integer(Z, r, [](std::int64_t n) { return n; });
        case K::delta1: return Expansion::integer(Z, r, [](std::int64_t n) { return integer_radical(n); });
        case K::full: return Expansion::integer(Z, r, [](std::int64_t) { return std::int64_t{1}; });
        case K::delta_plus: {
            auto q = integer_param(Z, r.gens);
            return Expansion::integer(Z, r, [q](std::int64_t n) { return gcd64(n, q); });
        }
        case K::delta_star: {
            auto m = integer_param(Z, r.gens);
            return Expansion::integer(Z, r, [m](std::int64_t n) { return integer_colon(n, m); });
        }
        case K::compose:
            return compose_expansions(make_expansion(Z, r.children[0]), make_expansion(Z, r.children[1]));
        default: break;
    }
    throw AlgebraError(Errc::invalid_spec, to_string(r) + " is not available over ZZ");
}

}  // namespace detail

/**
 * Builds a catalog expansion. Derived kinds need their construction record and
 * are built by the derive_* functions below instead.
 */
inline Expansion make_expansion(const Ring& R, const ExpansionRecipe& recipe, std::shared_ptr<const IdealLattice> L) {
    using K = ExpansionRecipe::Kind;
    if (!R.is_finite()) return detail::make_integer_expansion(R, recipe);
    if (!L) L = IdealLattice::build(R);
    switch (recipe.kind) {
        case K::delta0: return Expansion::from_function(L, recipe, [](const Ideal& I) { return I; });
        case K::delta1: return Expansion::from_function(L, recipe, [](const Ideal& I) { return radical(I); });
        case K::full: return Expansion::from_function(L, recipe, [R](const Ideal&) { return unit_ideal(R); });
        case K::delta_plus: {
            auto J = ideal_from_exprs(R, recipe.gens);
            return Expansion::from_function(L, recipe, [J](const Ideal& I) { return ideal_sum(I, J); });
        }
        case K::delta_star: {
            auto P = ideal_from_exprs(R, recipe.gens);
            return Expansion::from_function(L, recipe, [P](const Ideal& I) { return colon(I, P); });
        }
        case K::compose:
            return compose_expansions(make_expansion(R, recipe.children[0], L), make_expansion(R, recipe.children[1], L));
        default: break;
    }
    throw AlgebraError(Errc::invalid_spec, to_string(recipe) + " must be built from its construction");
}

// ---------------------------------------------------------------------------
// Derived expansions

/// delta_q(K/J) = delta(K)/J on R/J.
inline Expansion derive_quotient_expansion(const Expansion& d, const QuotientRing& q,
                                           std::shared_ptr<const IdealLattice> L = nullptr) {
    if (!(d.ring() == q.projection.source())) throw AlgebraError(Errc::cross_ring, "expansion and quotient disagree on the base ring");
    ExpansionRecipe r{ExpansionRecipe::Kind::quotient_derived, q.modulus.generator_exprs(), {d.recipe()}, {}};
    if (!L) L = IdealLattice::build(q.ring);
    return Expansion::from_function(std::move(L), r, [d, q](const Ideal& K) { return q.image(d.apply(q.preimage(K))); });
}

inline Expansion derive_quotient_expansion(const Expansion& d, const Ideal& J) {
    return derive_quotient_expansion(d, quotient_ring(d.ring(), J));
}

/// Splits an ideal of R1 x R2 into its components; every ideal of a product splits.
inline std::pair<Ideal, Ideal> split_product_ideal(const Ring& R1, const Ring& R2, const Ideal& I) {
    const auto n2 = R2.n();
    ElementSet a(R1.n()), b(n2);
    I.elements().for_each([&](std::size_t p) {
        a.set(static_cast<Index>(p / n2));
        b.set(static_cast<Index>(p % n2));
    });
    if (a.count() * b.count() != I.size())
        throw AlgebraError(Errc::invalid_spec, "ideal " + I.to_string() + " of the product does not split");
    return {Ideal::from_set(R1, a), Ideal::from_set(R2, b)};
}

/// delta_x(I1 x I2) = delta1(I1) x delta2(I2) on R1 x R2.
inline Expansion derive_product_expansion(const Expansion& d1, const Expansion& d2,
                                          std::shared_ptr<const IdealLattice> L = nullptr) {
    const Ring &R1 = d1.ring(), &R2 = d2.ring();
    auto P = make_product_ring(R1, R2);
    ExpansionRecipe r{ExpansionRecipe::Kind::product_derived, {}, {d1.recipe(), d2.recipe()}, {}};
    const auto n2 = R2.n();
    if (!L) L = IdealLattice::build(P);
    return Expansion::from_function(std::move(L), r, [=](const Ideal& I) {
        auto [I1, I2] = split_product_ideal(R1, R2, I);
        auto A = d1.apply(I1), B = d2.apply(I2);
        ElementSet s(P.n());
        A.elements().for_each([&](std::size_t x) {
            B.elements().for_each([&](std::size_t y) { s.set(static_cast<Index>(x * n2 + y)); });
        });
        return Ideal::from_set(P, s);
    });
}

/**
 * delta_(+)(I(+)N) = delta(I)(+)M. An ideal that is not of the form I(+)N is
 * first replaced by its projection I (see Idealization::is_homogeneous).
 */
inline Expansion derive_idealization_expansion(const Expansion& d, const Idealization& ide,
                                               std::shared_ptr<const IdealLattice> L = nullptr) {
    if (!(d.ring() == ide.base)) throw AlgebraError(Errc::cross_ring, "expansion is not on the idealization's base");
    ExpansionRecipe r{ExpansionRecipe::Kind::idealization_derived, {}, {d.recipe()}, ide.module.spec()};
    Submodule whole{ide.module, ElementSet(ide.module.size()).complement()};
    if (!L) L = IdealLattice::build(ide.ring);
    return Expansion::from_function(std::move(L), r, [d, ide, whole](const Ideal& K) {
        return ide.homogeneous_ideal(d.apply(ide.projection(K)), whole);
    });
}

/// delta_S(K) = S^-1 delta(K^c), using the contraction as the representative.
inline Expansion derive_localized_expansion(const Expansion& d, const Localization& loc,
                                            std::shared_ptr<const IdealLattice> L = nullptr) {
    if (!(d.ring() == loc.base)) throw AlgebraError(Errc::cross_ring, "expansion is not on the localized ring");
    std::vector<ElemExpr> s;
    for (auto x : loc.set.members.members()) s.push_back(loc.base.expr(static_cast<Index>(x)));
    ExpansionRecipe r{ExpansionRecipe::Kind::localization_derived, s, {d.recipe()}, {}};
    if (!L) L = IdealLattice::build(loc.ring);
    return Expansion::from_function(std::move(L), r, [d, loc](const Ideal& K) { return loc.extend(d.apply(loc.contract(K))); });
}

/// Pairs I, I' with S^-1 I = S^-1 I' but S^-1 delta(I) != S^-1 delta(I').
struct LocalizationCollision {
    Ideal first, second;
};

inline std::vector<LocalizationCollision> localized_collisions(const Expansion& d, const Localization& loc) {
    std::vector<LocalizationCollision> out;
    const auto& L = d.lattice();
    std::vector<Ideal> ext, extd;
    for (const auto& I : L) {
        ext.push_back(loc.extend(I));
        extd.push_back(loc.extend(d.apply(I)));
    }
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = i + 1; j < L.size(); ++j)
            if (ext[i] == ext[j] && !(extd[i] == extd[j])) out.push_back({L[i], L[j]});
    return out;
}

// ---------------------------------------------------------------------------
// Profiles

struct ExpansionProfile {
    bool intersection_preserving = true;
    bool idempotent_on_all = true;
    bool zero_fixed = true;
    bool radical_commuting = true;
    bool colon_condition = true;
    std::map<std::string, std::string> witnesses;  // flag name -> first failure found
};

/**
 * The colon hypothesis at a single proper ideal J: delta(J) != R, and for every
 * x outside delta(J), (delta(J):x) is inside delta(J:x) and delta(J:x) != R.
 * Returns a description of the first violation, or nullopt.
 */
inline std::optional<std::string> colon_condition_violation(const Expansion& d, const Ideal& J) {
    const Ring& R = d.ring();
    auto dJ = d.apply(J);
    if (!dJ.is_proper()) return "J=" + J.to_string() + ": delta(J) = R";
    if (!R.is_finite()) {
        // Over ZZ the residues of x modulo lcm(n, generators) repeat; a bounded scan suffices for the catalog.
        for (std::int64_t x = 0; x <= 256; ++x) {
            if (dJ.contains(R.element(x))) continue;
            auto Jx = colon(J, R.element(x));
            auto dJx = d.apply(Jx);
            if (!dJx.is_proper()) return "J=" + J.to_string() + ", x=" + std::to_string(x) + ": delta(J:x) = R";
            if (!colon(dJ, R.element(x)).subset_of(dJx))
                return "J=" + J.to_string() + ", x=" + std::to_string(x) + ": (delta(J):x) not inside delta(J:x)";
        }
        return std::nullopt;
    }
    for (Index x = 0; x < R.n(); ++x) {
        if (dJ.contains(x)) continue;
        auto Jx = colon(J, R.element(x));
        auto dJx = d.apply(Jx);
        if (!dJx.is_proper()) return "J=" + J.to_string() + ", x=" + R.format(x) + ": delta(J:x) = R";
        if (!colon(dJ, R.element(x)).subset_of(dJx))
            return "J=" + J.to_string() + ", x=" + R.format(x) + ": (delta(J):x) not inside delta(J:x)";
    }
    return std::nullopt;
}

/// Bound on the generators scanned when profiling expansions of ZZ.
inline constexpr std::int64_t kIntegerProfileBound = 200;

inline ExpansionProfile profile_expansion(const Expansion& d) {
    ExpansionProfile p;
    const Ring& R = d.ring();
    auto note = [&](bool& flag, const char* name, const std::string& w) {
        if (flag) p.witnesses[name] = w;
        flag = false;
    };
    std::vector<Ideal> ideals;
    if (R.is_finite()) {
        ideals = d.lattice().ideals();
    } else {
        for (std::int64_t n = 0; n <= kIntegerProfileBound; ++n) ideals.push_back(Ideal::integer_multiples(R, n));
    }
    auto zero = zero_ideal(R);
    if (!(d.apply(zero) == zero)) note(p.zero_fixed, "zero_fixed", "delta(0) = " + d.apply(zero).to_string());
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        const auto& I = ideals[i];
        auto dI = d.apply(I);
        if (p.idempotent_on_all && !(d.apply(dI) == dI)) note(p.idempotent_on_all, "idempotent_on_all", "I=" + I.to_string());
        if (p.radical_commuting && !(radical(dI) == d.apply(radical(I))))
            note(p.radical_commuting, "radical_commuting", "I=" + I.to_string());
        if (p.colon_condition && I.is_proper())
            if (auto v = colon_condition_violation(d, I)) note(p.colon_condition, "colon_condition", *v);
        if (!p.intersection_preserving) continue;
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
            const auto& J = ideals[j];
            if (!(d.apply(ideal_intersect(I, J)) == ideal_intersect(dI, d.apply(J)))) {
                note(p.intersection_preserving, "intersection_preserving", "I=" + I.to_string() + ", J=" + J.to_string());
                break;
            }
        }
    }
    return p;
}

/// delta(f^-1(J)) = f^-1(gamma(J)) for every ideal J of the target.
inline bool is_delta_gamma_homomorphism(const Homomorphism& f, const Expansion& d, const Expansion& g) {
    if (!(d.ring() == f.source()) || !(g.ring() == f.target()))
        throw AlgebraError(Errc::cross_ring, "expansions do not match the homomorphism's rings");
    for (const auto& J : g.lattice())
        if (!(d.apply(preimage_ideal(f, J)) == preimage_ideal(f, g.apply(J)))) return false;
    return true;
}

}  // namespace dni
