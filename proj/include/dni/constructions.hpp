#pragma once

/**
 * @file constructions.hpp
 * @brief Derived rings (quotients, idealizations, localizations), modules and
 * ring homomorphisms, plus the recipe-driven `construct_ring` entry point.
 */

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dni/ideal.hpp"
#include "dni/ring.hpp"

namespace dni {

// ---------------------------------------------------------------------------
// Homomorphisms

/**
 * Ring homomorphism between finite rings, stored as a total element map.
 * The one infinite case supported is reduction ZZ -> Z_n.
 */
class Homomorphism {
public:
    const Ring& source() const { return source_; }
    const Ring& target() const { return target_; }
    const Ideal& kernel() const { return kernel_; }
    bool is_reduction() const { return reduction_; }

    Index apply(Index a) const { return map_[a]; }
    Element apply(const Element& a) const {
        source_.check(a);
        if (reduction_) return target_.element(detail::mod(a.value(), static_cast<std::int64_t>(target_.n())));
        return target_.element(map_[a.index()]);
    }
    const std::vector<Index>& table() const { return map_; }

    bool injective() const { return kernel_.is_zero(); }
    bool surjective() const {
        if (reduction_) return true;
        ElementSet hit(target_.n());
        for (auto v : map_) hit.set(v);
        return hit.count() == target_.n();
    }

private:
    friend Homomorphism make_homomorphism(const Ring&, const Ring&, std::vector<Index>);
    friend Homomorphism make_reduction_homomorphism(const Ring&, const Ring&);

    Ring source_, target_;
    std::vector<Index> map_;
    Ideal kernel_;
    bool reduction_ = false;
};

/// Validates 0, 1, sums and products exhaustively.
inline Homomorphism make_homomorphism(const Ring& R, const Ring& S, std::vector<Index> map) {
    if (!R.is_finite() || !S.is_finite())
        throw AlgebraError(Errc::infinite_backend, "table homomorphisms need finite rings");
    if (map.size() != R.n()) throw AlgebraError(Errc::axiom_violation, "map is not total on " + R.key());
    for (auto v : map)
        if (v >= S.n()) throw AlgebraError(Errc::axiom_violation, "map leaves " + S.key());
    if (map[R.one_index()] != S.one_index()) throw AlgebraError(Errc::axiom_violation, "f(1) != 1");
    for (Index a = 0; a < R.n(); ++a)
        for (Index b = 0; b < R.n(); ++b) {
            if (map[R.add(a, b)] != S.add(map[a], map[b]))
                throw AlgebraError(Errc::axiom_violation, "f(a+b) != f(a)+f(b) at a=" + R.format(a) + ", b=" + R.format(b));
            if (map[R.mul(a, b)] != S.mul(map[a], map[b]))
                throw AlgebraError(Errc::axiom_violation, "f(ab) != f(a)f(b) at a=" + R.format(a) + ", b=" + R.format(b));
        }
    Homomorphism f;
    f.source_ = R;
    f.target_ = S;
    f.map_ = std::move(map);
    ElementSet ker(R.n());
    for (Index a = 0; a < R.n(); ++a)
        if (f.map_[a] == S.zero_index()) ker.set(a);
    f.kernel_ = Ideal::from_set(R, std::move(ker));
    return f;
}

inline Homomorphism make_homomorphism(const Ring& R, const Ring& S, const std::function<Element(const Element&)>& fn) {
    std::vector<Index> map;
    for (auto& a : list_elements(R)) {
        auto b = fn(a);
        S.check(b);
        map.push_back(b.index());
    }
    return make_homomorphism(R, S, std::move(map));
}

/// ZZ -> Z_n, a |-> a mod n.
inline Homomorphism make_reduction_homomorphism(const Ring& Z, const Ring& Zn) {
    if (Z.is_finite() || Zn.spec().kind != RingSpec::Kind::modular)
        throw AlgebraError(Errc::invalid_spec, "reduction maps go from ZZ to a modular ring");
    Homomorphism f;
    f.source_ = Z;
    f.target_ = Zn;
    f.reduction_ = true;
    f.kernel_ = Ideal::integer_multiples(Z, Zn.spec().modulus);
    return f;
}

inline Ideal preimage_ideal(const Homomorphism& f, const Ideal& K) {
    if (!(K.ring() == f.target())) throw AlgebraError(Errc::cross_ring, "ideal is not in the target ring");
    if (f.is_reduction()) {
        // Ideals of Z_n are dZ_n with d | n; the preimage is dZZ.
        auto n = static_cast<std::int64_t>(f.target().n());
        std::int64_t d = n;
        K.elements().for_each([&](std::size_t v) { d = detail::gcd64(d, static_cast<std::int64_t>(v)); });
        return Ideal::integer_multiples(f.source(), d);
    }
    ElementSet s(f.source().n());
    for (Index a = 0; a < f.source().n(); ++a)
        if (K.contains(f.apply(a))) s.set(a);
    return Ideal::from_set(f.source(), std::move(s));
}

inline Ideal image_ideal(const Homomorphism& f, const Ideal& I) {
    if (!(I.ring() == f.source())) throw AlgebraError(Errc::cross_ring, "ideal is not in the source ring");
    if (f.is_reduction()) {
        auto n = static_cast<std::int64_t>(f.target().n());
        return ideal_from_generators(f.target(), {f.target().element(detail::mod(I.integer_generator(), n))});
    }
    if (!f.surjective()) throw AlgebraError(Errc::not_surjective, f.source().key() + " -> " + f.target().key());
    ElementSet s(f.target().n());
    I.elements().for_each([&](std::size_t a) { s.set(f.apply(static_cast<Index>(a))); });
    return Ideal::from_set(f.target(), std::move(s));
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientRing {
    Ring ring;
    Homomorphism projection;
    Ideal modulus;  // the ideal J in R/J

    Ideal image(const Ideal& I) const { return image_ideal(projection, I); }
    Ideal preimage(const Ideal& K) const { return preimage_ideal(projection, K); }
};

/// R/J with cosets represented by their least member in R's enumeration order.
inline QuotientRing quotient_ring(const Ring& R, const Ideal& J) {
    if (!(J.ring() == R)) throw AlgebraError(Errc::cross_ring, "ideal is not in " + R.key());
    if (!R.is_finite()) throw AlgebraError(Errc::infinite_backend, "quotients of ZZ are built as Zn directly");
    if (!J.is_proper()) throw AlgebraError(Errc::improper_ideal, "cannot form the quotient by the whole ring");
    const auto n = R.n();
    std::vector<Index> coset_of(n, 0), reps;
    std::vector<bool> assigned(n, false);
    auto jm = J.elements().members();
    for (Index a = 0; a < n; ++a) {
        if (assigned[a]) continue;
        auto c = static_cast<Index>(reps.size());
        reps.push_back(a);
        for (auto j : jm) {
            auto b = R.add(a, static_cast<Index>(j));
            assigned[b] = true;
            coset_of[b] = c;
        }
    }
    const auto m = reps.size();
    auto spec = RingSpec::quotient_ring(R.spec(), J.generator_exprs());
    auto impl = detail::new_impl(spec, m);
    for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) {
            impl->add[a * m + b] = coset_of[R.add(reps[a], reps[b])];
            impl->mul[a * m + b] = coset_of[R.mul(reps[a], reps[b])];
        }
    impl->zero = coset_of[R.zero_index()];
    impl->one = coset_of[R.one_index()];
    impl->to_expr = [R, reps](Index c) { return R.expr(reps[c]); };
    impl->from_expr = [R, coset_of](const ElemExpr& e) { return coset_of[R.bind(e).index()]; };
    Ring Q(detail::finish_impl(impl));
    return QuotientRing{Q, make_homomorphism(R, Q, coset_of), J};
}

// ---------------------------------------------------------------------------
// Modules

struct ModuleImpl {
    Ring base;
    RingSpec spec;
    std::size_t m = 0;
    std::vector<Index> add, act, neg;  // act[r * m + x] = r.x
    Index zero = 0;
    std::function<ElemExpr(Index)> to_expr;
    std::function<Index(const ElemExpr&)> from_expr;
};

/// Finite unitary module over a finite ring.
class Module {
public:
    Module() = default;
    explicit Module(std::shared_ptr<const ModuleImpl> impl) : impl_(std::move(impl)) {}

    const Ring& base() const { return impl_->base; }
    const RingSpec& spec() const { return impl_->spec; }
    std::size_t size() const { return impl_->m; }
    Index add(Index x, Index y) const { return impl_->add[x * impl_->m + y]; }
    Index act(Index r, Index x) const { return impl_->act[r * impl_->m + x]; }
    Index neg(Index x) const { return impl_->neg[x]; }
    Index zero() const { return impl_->zero; }
    ElemExpr expr(Index x) const { return impl_->to_expr(x); }
    Index bind(const ElemExpr& e) const { return impl_->from_expr(e); }

private:
    std::shared_ptr<const ModuleImpl> impl_;
};

namespace detail {

inline Module finish_module(std::shared_ptr<ModuleImpl> M) {
    const auto m = M->m;
    const Ring& R = M->base;
    M->neg.assign(m, 0);
    for (Index x = 0; x < m; ++x)
        for (Index y = 0; y < m; ++y)
            if (M->add[x * m + y] == M->zero) {
                M->neg[x] = y;
                break;
            }
    auto A = [&](Index x, Index y) { return M->add[x * m + y]; };
    auto S = [&](Index r, Index x) { return M->act[r * m + x]; };
    auto fail = [&](const std::string& w) { throw AlgebraError(Errc::axiom_violation, "module " + to_string(M->spec) + ": " + w); };
    for (Index x = 0; x < m; ++x) {
        if (S(R.one_index(), x) != x) fail("1.x != x");
        for (Index y = 0; y < m; ++y)
            for (Index r = 0; r < R.n(); ++r)
                if (S(r, A(x, y)) != A(S(r, x), S(r, y))) fail("r(x+y) != rx+ry");
        for (Index r = 0; r < R.n(); ++r)
            for (Index s = 0; s < R.n(); ++s) {
                if (S(R.add(r, s), x) != A(S(r, x), S(s, x))) fail("(r+s)x != rx+sx");
                if (S(R.mul(r, s), x) != S(r, S(s, x))) fail("(rs)x != r(sx)");
            }
    }
    return Module(std::move(M));
}

}  // namespace detail

/**
 * Builds a module over R from a recipe: R's own recipe gives the regular module,
 * `quot(R, (gens))` the quotient module R/I (I proper), and a product of such
 * recipes the direct sum.
 */
inline Module make_module(const Ring& R, const RingSpec& spec) {
    if (!R.is_finite()) throw AlgebraError(Errc::infinite_backend, "modules need a finite base ring");
    auto M = std::make_shared<ModuleImpl>();
    M->base = R;
    M->spec = spec;
    if (spec == R.spec()) {
        const auto n = R.n();
        M->m = n;
        M->add = R.impl().add;
        M->act = R.impl().mul;
        M->zero = R.zero_index();
        M->to_expr = [R](Index x) { return R.expr(x); };
        M->from_expr = [R](const ElemExpr& e) { return R.bind(e).index(); };
        return detail::finish_module(M);
    }
    if (spec.kind == RingSpec::Kind::quotient && spec.children[0] == R.spec()) {
        auto I = ideal_from_exprs(R, spec.elems);
        if (!I.is_proper()) throw AlgebraError(Errc::improper_ideal, "quotient module by the whole ring is the zero module");
        auto Q = quotient_ring(R, I);
        M->spec = Q.ring.spec();
        const auto m = Q.ring.n();
        M->m = m;
        M->add = Q.ring.impl().add;
        M->act.resize(R.n() * m);
        for (Index r = 0; r < R.n(); ++r)
            for (Index x = 0; x < m; ++x) M->act[r * m + x] = Q.ring.mul(Q.projection.apply(r), x);
        M->zero = Q.ring.zero_index();
        M->to_expr = [Qr = Q.ring](Index x) { return Qr.expr(x); };
        M->from_expr = [Qr = Q.ring](const ElemExpr& e) { return Qr.bind(e).index(); };
        return detail::finish_module(M);
    }
    if (spec.kind == RingSpec::Kind::product) {
        auto A = make_module(R, spec.children[0]), B = make_module(R, spec.children[1]);
        M->spec = RingSpec::product_ring(A.spec(), B.spec());
        const auto mb = B.size(), m = A.size() * mb;
        M->m = m;
        M->add.resize(m * m);
        M->act.resize(R.n() * m);
        for (Index x = 0; x < m; ++x) {
            for (Index y = 0; y < m; ++y)
                M->add[x * m + y] = static_cast<Index>(A.add(x / mb, y / mb) * mb + B.add(x % mb, y % mb));
            for (Index r = 0; r < R.n(); ++r)
                M->act[r * m + x] = static_cast<Index>(A.act(r, x / mb) * mb + B.act(r, x % mb));
        }
        M->zero = static_cast<Index>(A.zero() * mb + B.zero());
        M->to_expr = [A, B, mb](Index x) {
            return ElemExpr::pair(A.expr(static_cast<Index>(x / mb)), B.expr(static_cast<Index>(x % mb)));
        };
        M->from_expr = [A, B, mb](const ElemExpr& e) {
            if (e.kind != ElemExpr::Kind::pair) throw AlgebraError(Errc::invalid_spec, "pair expected in product module");
            return static_cast<Index>(A.bind(e.parts[0]) * mb + B.bind(e.parts[1]));
        };
        return detail::finish_module(M);
    }
    throw AlgebraError(Errc::invalid_spec, to_string(spec) + " is not a module recipe over " + R.key());
}

struct Submodule {
    Module module;
    ElementSet members;

    bool contains(Index x) const { return members.test(x); }
    friend bool operator==(const Submodule& a, const Submodule& b) { return a.members == b.members; }
};

/// All submodules, by closing the cyclic submodules under sums. Sorted like ideal lattices.
inline std::vector<Submodule> enumerate_submodules(const Module& M) {
    const Ring& R = M.base();
    auto cyclic = [&](Index x) {
        ElementSet s(M.size());
        for (Index r = 0; r < R.n(); ++r) s.set(M.act(r, x));
        return s;
    };
    auto sum = [&](const ElementSet& a, const ElementSet& b) {
        ElementSet s(M.size());
        auto bm = b.members();
        a.for_each([&](std::size_t x) {
            for (auto y : bm) s.set(M.add(static_cast<Index>(x), static_cast<Index>(y)));
        });
        return s;
    };
    std::unordered_map<ElementSet, bool, ElementSetHash> found;
    std::vector<ElementSet> gens;
    std::deque<ElementSet> work;
    for (Index x = 0; x < M.size(); ++x) {
        auto c = cyclic(x);
        if (found.emplace(c, true).second) gens.push_back(c), work.push_back(c);
    }
    while (!work.empty()) {
        auto cur = work.front();
        work.pop_front();
        for (auto& g : gens) {
            auto s = sum(cur, g);
            if (found.emplace(s, true).second) work.push_back(s);
        }
    }
    std::vector<ElementSet> sets;
    for (auto& [s, _] : found) sets.push_back(s);
    std::sort(sets.begin(), sets.end());
    std::vector<Submodule> out;
    for (auto& s : sets) out.push_back(Submodule{M, s});
    return out;
}

// ---------------------------------------------------------------------------
// Idealization R(+)M

struct Idealization {
    Ring ring;
    Ring base;
    Module module;

    Index pair_index(Index r, Index x) const { return static_cast<Index>(r * module.size() + x); }
    Index first(Index p) const { return static_cast<Index>(p / module.size()); }
    Index second(Index p) const { return static_cast<Index>(p % module.size()); }

    /// I(+)N; requires IM subset of N.
    Ideal homogeneous_ideal(const Ideal& I, const Submodule& N) const {
        if (!(I.ring() == base)) throw AlgebraError(Errc::cross_ring, "ideal is not in " + base.key());
        for (auto a : I.elements().members())
            for (Index x = 0; x < module.size(); ++x)
                if (!N.contains(module.act(static_cast<Index>(a), x)))
                    throw AlgebraError(Errc::invalid_spec, "IM is not contained in N, so I(+)N is not an ideal");
        ElementSet s(ring.n());
        I.elements().for_each([&](std::size_t a) {
            N.members.for_each([&](std::size_t x) { s.set(pair_index(static_cast<Index>(a), static_cast<Index>(x))); });
        });
        return Ideal::from_set(ring, std::move(s));
    }

    bool admits(const Ideal& I, const Submodule& N) const {
        for (auto a : I.elements().members())
            for (Index x = 0; x < module.size(); ++x)
                if (!N.contains(module.act(static_cast<Index>(a), x))) return false;
        return true;
    }

    /// {r : (r, m) in K for some m}.
    Ideal projection(const Ideal& K) const {
        ElementSet s(base.n());
        K.elements().for_each([&](std::size_t p) { s.set(first(static_cast<Index>(p))); });
        return Ideal::from_set(base, std::move(s));
    }

    /// K is of the form I(+)N.
    bool is_homogeneous(const Ideal& K) const {
        bool ok = true;
        projection(K).elements().for_each([&](std::size_t a) { ok = ok && K.contains(pair_index(static_cast<Index>(a), module.zero())); });
        return ok;
    }
};

inline Idealization idealization(const Ring& R, const Module& M) {
    if (!(M.base() == R)) throw AlgebraError(Errc::cross_ring, "module is not over " + R.key());
    const auto mm = M.size(), n = R.n() * mm;
    auto spec = RingSpec::idealization_ring(R.spec(), M.spec());
    auto impl = detail::new_impl(spec, n);
    for (Index p = 0; p < n; ++p)
        for (Index q = 0; q < n; ++q) {
            Index r1 = p / mm, x1 = p % mm, r2 = q / mm, x2 = q % mm;
            impl->add[p * n + q] = static_cast<Index>(R.add(r1, r2) * mm + M.add(x1, x2));
            impl->mul[p * n + q] = static_cast<Index>(R.mul(r1, r2) * mm + M.add(M.act(r1, x2), M.act(r2, x1)));
        }
    impl->zero = static_cast<Index>(R.zero_index() * mm + M.zero());
    impl->one = static_cast<Index>(R.one_index() * mm + M.zero());
    impl->to_expr = [R, M, mm](Index p) {
        return ElemExpr::pair(R.expr(static_cast<Index>(p / mm)), M.expr(static_cast<Index>(p % mm)));
    };
    impl->from_expr = [R, M, mm, key = impl->key](const ElemExpr& e) {
        if (e.kind != ElemExpr::Kind::pair)
            throw AlgebraError(Errc::invalid_spec, "pair <r,m> expected in " + key + ", got " + to_string(e));
        return static_cast<Index>(R.bind(e.parts[0]).index() * mm + M.bind(e.parts[1]));
    };
    return Idealization{Ring(detail::finish_impl(impl)), R, M};
}

// ---------------------------------------------------------------------------
// Localization

struct MultiplicativeSet {
    Ring ring;
    ElementSet members;

    bool contains(Index a) const { return members.test(a); }
};

inline MultiplicativeSet make_multiplicative_set(const Ring& R, const std::vector<Element>& elems) {
    if (!R.is_finite()) throw AlgebraError(Errc::infinite_backend, "localization of ZZ is not supported");
    ElementSet s(R.n());
    for (auto& e : elems) {
        R.check(e);
        s.set(e.index());
    }
    if (!s.test(R.one_index())) throw AlgebraError(Errc::not_multiplicative, "1 is not in S");
    for (auto a : s.members())
        for (auto b : s.members())
            if (!s.test(R.mul(static_cast<Index>(a), static_cast<Index>(b))))
                throw AlgebraError(Errc::not_multiplicative,
                                   R.format(static_cast<Index>(a)) + "*" + R.format(static_cast<Index>(b)) + " is not in S");
    if (s.test(R.zero_index())) throw AlgebraError(Errc::not_multiplicative, "0 in S gives the zero ring");
    return MultiplicativeSet{R, std::move(s)};
}

/// Multiplicative closure of {1} together with the given elements.
inline MultiplicativeSet multiplicative_closure(const Ring& R, const std::vector<Index>& seeds) {
    ElementSet s(R.n());
    s.set(R.one_index());
    std::deque<Index> work{R.one_index()};
    for (auto g : seeds)
        if (!s.test(g)) s.set(g), work.push_back(g);
    while (!work.empty()) {
        auto x = work.front();
        work.pop_front();
        for (auto y : s.members()) {
            auto p = R.mul(x, static_cast<Index>(y));
            if (!s.test(p)) s.set(p), work.push_back(p);
        }
    }
    std::vector<Element> els;
    for (auto m : s.members()) els.push_back(R.element(static_cast<std::int64_t>(m)));
    return make_multiplicative_set(R, els);
}

struct Localization {
    Ring ring;
    Ring base;
    MultiplicativeSet set;
    Homomorphism canonical;

    /// S^-1 I: the ideal generated by the images of I.
    Ideal extend(const Ideal& I) const {
        std::vector<Element> imgs;
        for (auto a : I.elements().members()) imgs.push_back(canonical.apply(base.element(static_cast<std::int64_t>(a))));
        return ideal_from_generators(ring, imgs);
    }
    /// Preimage under the canonical map.
    Ideal contract(const Ideal& K) const { return preimage_ideal(canonical, K); }
};

/**
 * S^-1 R as classes of pairs (r, s), with (r,s) ~ (r',s') iff u(rs' - r's) = 0
 * for some u in S. Each class is represented by its lexicographically least pair.
 */
inline Localization localize(const Ring& R, const MultiplicativeSet& S) {
    if (!(S.ring == R)) throw AlgebraError(Errc::cross_ring, "multiplicative set is not in " + R.key());
    const auto n = R.n();
    auto svec = S.members.members();
    const auto ns = svec.size();
    std::vector<std::size_t> spos(n, 0);
    for (std::size_t k = 0; k < ns; ++k) spos[svec[k]] = k;
    // Elements killed by some u in S.
    ElementSet killed(n);
    for (Index d = 0; d < n; ++d)
        for (auto u : svec)
            if (R.mul(static_cast<Index>(u), d) == R.zero_index()) {
                killed.set(d);
                break;
            }
    const auto np = n * ns;
    auto pr = [&](std::size_t p) { return static_cast<Index>(p / ns); };
    auto ps = [&](std::size_t p) { return static_cast<Index>(svec[p % ns]); };
    std::vector<Index> class_of(np, 0);
    std::vector<std::size_t> reps;
    std::vector<bool> assigned(np, false);
    for (std::size_t p = 0; p < np; ++p) {
        if (assigned[p]) continue;
        auto c = static_cast<Index>(reps.size());
        reps.push_back(p);
        for (std::size_t q = p; q < np; ++q) {
            if (assigned[q]) continue;
            auto d = R.sub(R.mul(pr(p), ps(q)), R.mul(pr(q), ps(p)));
            if (killed.test(d)) assigned[q] = true, class_of[q] = c;
        }
    }
    auto pair_id = [&](Index r, Index s) { return r * ns + spos[s]; };
    const auto m = reps.size();
    std::vector<ElemExpr> sexprs;
    for (auto s : svec) sexprs.push_back(R.expr(static_cast<Index>(s)));
    auto spec = RingSpec::localization_ring(R.spec(), sexprs);
    auto impl = detail::new_impl(spec, m);
    for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) {
            auto r1 = pr(reps[a]), s1 = ps(reps[a]), r2 = pr(reps[b]), s2 = ps(reps[b]);
            auto ss = R.mul(s1, s2);
            impl->add[a * m + b] = class_of[pair_id(R.add(R.mul(r1, s2), R.mul(r2, s1)), ss)];
            impl->mul[a * m + b] = class_of[pair_id(R.mul(r1, r2), ss)];
        }
    impl->zero = class_of[pair_id(R.zero_index(), R.one_index())];
    impl->one = class_of[pair_id(R.one_index(), R.one_index())];
    std::vector<std::pair<Index, Index>> rep_pairs;
    for (auto p : reps) rep_pairs.emplace_back(pr(p), ps(p));
    impl->to_expr = [R, rep_pairs](Index c) {
        return ElemExpr::frac(R.expr(rep_pairs[c].first), R.expr(rep_pairs[c].second));
    };
    impl->from_expr = [R, S, class_of, spos, ns, key = impl->key](const ElemExpr& e) {
        Index r, s;
        if (e.kind == ElemExpr::Kind::frac) {
            r = R.bind(e.parts[0]).index();
            s = R.bind(e.parts[1]).index();
        } else {
            r = R.bind(e).index();
            s = R.one_index();
        }
        if (!S.contains(s)) throw AlgebraError(Errc::invalid_spec, "denominator " + R.format(s) + " is not in S for " + key);
        return class_of[r * ns + spos[s]];
    };
    Ring L(detail::finish_impl(impl));
    std::vector<Index> canon(n);
    for (Index r = 0; r < n; ++r) canon[r] = class_of[pair_id(r, R.one_index())];
    return Localization{L, R, S, make_homomorphism(R, L, canon)};
}

// ---------------------------------------------------------------------------

/// Builds any ring from its recipe.
inline Ring construct_ring(const RingSpec& spec) {
    using K = RingSpec::Kind;
    switch (spec.kind) {
        case K::modular: return make_modular_ring(spec.modulus);
        case K::integer: return make_integer_ring();
        case K::poly_quotient: return make_poly_quotient_ring(spec.children.at(0), spec.poly);
        case K::product: return make_product_ring(construct_ring(spec.children.at(0)), construct_ring(spec.children.at(1)));
        case K::quotient: {
            auto R = construct_ring(spec.children.at(0));
            return quotient_ring(R, ideal_from_exprs(R, spec.elems)).ring;
        }
        case K::idealization: {
            auto R = construct_ring(spec.children.at(0));
            return idealization(R, make_module(R, spec.children.at(1))).ring;
        }
        case K::localization: {
            auto R = construct_ring(spec.children.at(0));
            std::vector<Element> els;
            for (auto& e : spec.elems) els.push_back(R.bind(e));
            return localize(R, make_multiplicative_set(R, els)).ring;
        }
    }
    throw AlgebraError(Errc::invalid_spec, "unknown ring kind");
}

}  // namespace dni
