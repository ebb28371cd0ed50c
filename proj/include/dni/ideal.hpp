#pragma once

/**
 * @file ideal.hpp
 * @brief Ideals, their lattice operations, lattice enumeration and classification.
 *
 * Finite-ring ideals are canonical element sets; equality and deduplication go
 * through the set, never through the generator list. Ideals of ZZ are
 * represented by the nonnegative generator n of nZZ.
 */

#include <deque>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dni/element_set.hpp"
#include "dni/ring.hpp"

namespace dni {

namespace detail {

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd64(a, b), b < 0 ? -b : b);
}

/// Product of the distinct primes dividing n; rad(0) = 0, rad(1) = 1.
inline std::int64_t integer_radical(std::int64_t n) {
    if (n == 0) return 0;
    if (n < 0) n = -n;
    std::int64_t r = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        r *= p;
        while (n % p == 0) n /= p;
    }
    return n > 1 ? r * n : r;
}

}  // namespace detail

class Ideal {
public:
    Ideal() = default;

    /// Finite backend: wraps a canonical set that must already be an ideal.
    static Ideal from_set(const Ring& R, ElementSet set, std::vector<Index> gens = {}) {
        Ideal I;
        I.ring_ = R;
        I.set_ = std::move(set);
        I.gens_ = std::move(gens);
        return I;
    }
    /// Integer backend: the ideal nZZ.
    static Ideal integer_multiples(const Ring& Z, std::int64_t n) {
        Ideal I;
        I.ring_ = Z;
        I.n_ = n < 0 ? -n : n;
        return I;
    }

    const Ring& ring() const { return ring_; }
    bool finite() const { return ring_.is_finite(); }

    const ElementSet& elements() const { return set_; }
    /// nonnegative n with I = nZZ (integer backend only).
    std::int64_t integer_generator() const { return n_; }
    std::size_t size() const { return set_.count(); }

    bool contains(Index a) const { return set_.test(a); }
    bool contains(const Element& a) const {
        ring_.check(a);
        if (!finite()) return n_ == 0 ? a.value() == 0 : a.value() % n_ == 0;
        return set_.test(a.index());
    }

    bool is_proper() const { return finite() ? !set_.test(ring_.one_index()) : n_ != 1; }
    bool is_zero() const { return finite() ? set_.count() == 1 : n_ == 0; }

    bool subset_of(const Ideal& J) const {
        same_ring(J);
        if (!finite()) return J.n_ == 0 ? n_ == 0 : n_ % J.n_ == 0;
        return set_.is_subset_of(J.set_);
    }

    void same_ring(const Ideal& J) const {
        if (!(ring_ == J.ring_))
            throw AlgebraError(Errc::cross_ring, "ideals of " + ring_.key() + " and " + J.ring_.key());
    }

    /// A generating set; a greedy small one when none was recorded.
    std::vector<Element> generators() const;
    std::vector<ElemExpr> generator_exprs() const {
        std::vector<ElemExpr> out;
        for (auto& g : generators()) out.push_back(ring_.expr(g));
        return out;
    }
    /// "(g1,g2,...)" in canonical element notation.
    std::string to_string() const { return dni::to_string(generator_exprs()); }

    friend bool operator==(const Ideal& a, const Ideal& b) {
        if (!(a.ring_ == b.ring_)) return false;
        return a.finite() ? a.set_ == b.set_ : a.n_ == b.n_;
    }

private:
    Ring ring_;
    ElementSet set_;
    std::vector<Index> gens_;
    std::int64_t n_ = 0;
};

namespace detail {

/// Work-list saturation: adds all sums and ring multiples until fixpoint.
inline ElementSet saturate(const Ring& R, const std::vector<Index>& seeds) {
    ElementSet s(R.n());
    std::deque<Index> work;
    auto push = [&](Index x) {
        if (!s.test(x)) {
            s.set(x);
            work.push_back(x);
        }
    };
    push(R.zero_index());
    for (auto g : seeds) push(g);
    while (!work.empty()) {
        auto x = work.front();
        work.pop_front();
        for (Index r = 0; r < R.n(); ++r) push(R.mul(r, x));
        for (auto m : s.members()) push(R.add(x, m));
    }
    return s;
}

inline ElementSet principal_set(const Ring& R, Index a) {
    ElementSet s(R.n());
    for (Index r = 0; r < R.n(); ++r) s.set(R.mul(r, a));
    return s;
}

/// {i + j}; an ideal whenever both arguments are.
inline ElementSet sum_set(const Ring& R, const ElementSet& I, const ElementSet& J) {
    ElementSet s(R.n());
    auto jm = J.members();
    I.for_each([&](std::size_t i) {
        for (auto j : jm) s.set(R.add(static_cast<Index>(i), static_cast<Index>(j)));
    });
    return s;
}

}  // namespace detail

inline std::vector<Element> Ideal::generators() const {
    if (!finite()) return {ring_.element(n_)};
    std::vector<Element> out;
    if (!gens_.empty()) {
        for (auto g : gens_) out.push_back(ring_.element(g));
        return out;
    }
    ElementSet cur(ring_.n());
    cur.set(ring_.zero_index());
    if (set_ == cur) return {ring_.zero()};
    for (auto x : set_.members()) {
        if (cur.test(x)) continue;
        cur = detail::sum_set(ring_, cur, detail::principal_set(ring_, static_cast<Index>(x)));
        out.push_back(ring_.element(static_cast<std::int64_t>(x)));
        if (cur == set_) break;
    }
    return out;
}

inline Ideal ideal_from_generators(const Ring& R, const std::vector<Element>& gens) {
    if (!R.is_finite()) {
        std::int64_t g = 0;
        for (auto& x : gens) {
            R.check(x);
            g = detail::gcd64(g, x.value());
        }
        return Ideal::integer_multiples(R, g);
    }
    std::vector<Index> idx;
    for (auto& x : gens) {
        R.check(x);
        idx.push_back(x.index());
    }
    return Ideal::from_set(R, detail::saturate(R, idx), idx);
}

inline Ideal ideal_from_exprs(const Ring& R, const std::vector<ElemExpr>& gens) {
    std::vector<Element> els;
    for (auto& e : gens) els.push_back(R.bind(e));
    return ideal_from_generators(R, els);
}

inline Ideal zero_ideal(const Ring& R) { return ideal_from_generators(R, {}); }
inline Ideal unit_ideal(const Ring& R) { return ideal_from_generators(R, {R.one()}); }

inline bool ideal_contains(const Ideal& I, const Element& a) { return I.contains(a); }

enum class CombineOp { sum, product, intersect };

inline Ideal ideal_combine(CombineOp op, const Ideal& I, const Ideal& J) {
    I.same_ring(J);
    const Ring& R = I.ring();
    if (!R.is_finite()) {
        auto a = I.integer_generator(), b = J.integer_generator();
        switch (op) {
            case CombineOp::sum: return Ideal::integer_multiples(R, detail::gcd64(a, b));
            case CombineOp::product: return Ideal::integer_multiples(R, detail::checked_mul(a, b));
            case CombineOp::intersect: return Ideal::integer_multiples(R, detail::lcm64(a, b));
        }
    }
    switch (op) {
        case CombineOp::sum: return Ideal::from_set(R, detail::sum_set(R, I.elements(), J.elements()));
        case CombineOp::product: {
            std::vector<Index> prods;
            ElementSet seen(R.n());
            auto jm = J.elements().members();
            I.elements().for_each([&](std::size_t i) {
                for (auto j : jm) {
                    auto p = R.mul(static_cast<Index>(i), static_cast<Index>(j));
                    if (!seen.test(p)) seen.set(p), prods.push_back(p);
                }
            });
            return Ideal::from_set(R, detail::saturate(R, prods));
        }
        case CombineOp::intersect: return Ideal::from_set(R, I.elements() & J.elements());
    }
    return I;
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) { return ideal_combine(CombineOp::sum, I, J); }
inline Ideal ideal_product(const Ideal& I, const Ideal& J) { return ideal_combine(CombineOp::product, I, J); }
inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) { return ideal_combine(CombineOp::intersect, I, J); }

/// (I : x) = {r : rx in I}.
inline Ideal colon(const Ideal& I, const Element& x) {
    const Ring& R = I.ring();
    R.check(x);
    if (!R.is_finite()) {
        auto n = I.integer_generator(), m = x.value();
        if (n == 0) return Ideal::integer_multiples(R, m == 0 ? 1 : 0);
        return Ideal::integer_multiples(R, n / detail::gcd64(n, m));
    }
    ElementSet s(R.n());
    for (Index r = 0; r < R.n(); ++r)
        if (I.contains(R.mul(r, x.index()))) s.set(r);
    return Ideal::from_set(R, std::move(s));
}

/// (I : P) = {r : rP subset of I}.
inline Ideal colon(const Ideal& I, const Ideal& P) {
    I.same_ring(P);
    const Ring& R = I.ring();
    if (!R.is_finite()) return colon(I, R.element(P.integer_generator()));
    ElementSet s(R.n());
    auto pm = P.elements().members();
    for (Index r = 0; r < R.n(); ++r) {
        bool ok = true;
        for (auto p : pm)
            if (!I.contains(R.mul(r, static_cast<Index>(p)))) {
                ok = false;
                break;
            }
        if (ok) s.set(r);
    }
    return Ideal::from_set(R, std::move(s));
}

/// sqrt(I) = {r : r^k in I for some 1 <= k <= |R|}.
inline Ideal radical(const Ideal& I) {
    const Ring& R = I.ring();
    if (!R.is_finite()) return Ideal::integer_multiples(R, detail::integer_radical(I.integer_generator()));
    ElementSet s(R.n());
    for (Index r = 0; r < R.n(); ++r) {
        Index p = r;
        for (std::size_t k = 1; k <= R.n(); ++k) {
            if (I.contains(p)) {
                s.set(r);
                break;
            }
            p = R.mul(p, r);
        }
    }
    return Ideal::from_set(R, std::move(s));
}

inline Ideal nilradical(const Ring& R) { return radical(zero_ideal(R)); }

// ---------------------------------------------------------------------------
// Lattice

/**
 * The complete ideal lattice of a finite ring, sorted by (size, members).
 * Index 0 is the zero ideal and the last index is the ring itself.
 */
class IdealLattice {
public:
    static std::shared_ptr<const IdealLattice> build(const Ring& R) {
        if (!R.is_finite()) throw AlgebraError(Errc::infinite_backend, "ideals of ZZ are parameterized, not enumerated");
        auto L = std::make_shared<IdealLattice>();
        L->ring_ = R;
        std::unordered_map<ElementSet, std::vector<Index>, ElementSetHash> found;
        std::vector<ElementSet> principals;
        std::vector<Index> principal_gen;
        std::deque<ElementSet> work;
        for (Index a = 0; a < R.n(); ++a) {
            auto p = detail::principal_set(R, a);
            if (found.count(p)) continue;
            found.emplace(p, a == R.zero_index() ? std::vector<Index>{} : std::vector<Index>{a});
            principals.push_back(p);
            principal_gen.push_back(a);
            work.push_back(p);
        }
        while (!work.empty()) {
            auto cur = work.front();
            work.pop_front();
            auto gens = found.at(cur);
            for (std::size_t k = 0; k < principals.size(); ++k) {
                auto s = detail::sum_set(R, cur, principals[k]);
                if (found.count(s)) continue;
                auto g = gens;
                g.push_back(principal_gen[k]);
                found.emplace(s, std::move(g));
                work.push_back(std::move(s));
            }
        }
        std::vector<ElementSet> sets;
        for (auto& [s, g] : found) sets.push_back(s);
        std::sort(sets.begin(), sets.end());
        for (auto& s : sets) {
            auto g = found.at(s);
            if (g.empty()) g.push_back(R.zero_index());
            L->index_.emplace(s, L->ideals_.size());
            L->ideals_.push_back(Ideal::from_set(R, s, std::move(g)));
        }
        return L;
    }

    const Ring& ring() const { return ring_; }
    std::size_t size() const { return ideals_.size(); }
    const Ideal& operator[](std::size_t i) const { return ideals_[i]; }
    const std::vector<Ideal>& ideals() const { return ideals_; }
    auto begin() const { return ideals_.begin(); }
    auto end() const { return ideals_.end(); }

    std::size_t zero_index() const { return 0; }
    std::size_t whole_index() const { return ideals_.size() - 1; }

    std::optional<std::size_t> find(const ElementSet& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index_of(const Ideal& I) const {
        auto k = find(I.elements());
        if (!k) throw AlgebraError(Errc::invalid_spec, "set is not an ideal of " + ring_.key());
        return *k;
    }
    /// The lattice's own copy of I (carries lattice generators).
    const Ideal& canonical(const Ideal& I) const { return ideals_[index_of(I)]; }

    std::vector<std::size_t> maximal_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i + 1 < size(); ++i) {
            bool maximal = true;
            for (std::size_t j = 0; j + 1 < size() && maximal; ++j)
                if (j != i && ideals_[i].elements().is_subset_of(ideals_[j].elements()) &&
                    ideals_[i].elements() != ideals_[j].elements())
                    maximal = false;
            if (maximal) out.push_back(i);
        }
        return out;
    }

private:
    Ring ring_;
    std::vector<Ideal> ideals_;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

inline std::vector<Ideal> enumerate_ideals(const Ring& R) { return IdealLattice::build(R)->ideals(); }

// ---------------------------------------------------------------------------
// Classification

struct IdealClass {
    bool is_proper = false;
    bool is_prime = false;
    bool is_maximal = false;
    bool is_primary = false;
    bool is_superfluous = false;
};

namespace detail {

inline bool is_prime_power(std::int64_t n) {
    if (n < 2) return false;
    auto r = integer_radical(n);
    for (std::int64_t p = 2; p * p <= r; ++p)
        if (r % p == 0) return false;
    return true;
}

}  // namespace detail

inline IdealClass classify_ideal(const Ideal& I, const IdealLattice& L) {
    IdealClass c;
    c.is_proper = I.is_proper();
    if (!c.is_proper) return c;
    const Ring& R = I.ring();
    auto rad = radical(I);
    c.is_prime = c.is_primary = true;
    for (Index a = 0; a < R.n() && (c.is_prime || c.is_primary); ++a)
        for (Index b = 0; b < R.n(); ++b) {
            if (!I.contains(R.mul(a, b)) || I.contains(a)) continue;
            if (!I.contains(b)) c.is_prime = false;
            if (!rad.contains(b)) c.is_primary = false;
        }
    auto k = L.index_of(I);
    c.is_maximal = true;
    c.is_superfluous = true;
    for (std::size_t j = 0; j + 1 < L.size(); ++j) {
        const auto& J = L[j];
        if (j != k && I.subset_of(J)) c.is_maximal = false;
        if (!ideal_sum(I, J).is_proper()) c.is_superfluous = false;
    }
    return c;
}

inline IdealClass classify_ideal(const Ideal& I) {
    const Ring& R = I.ring();
    if (!R.is_finite()) {
        IdealClass c;
        auto n = I.integer_generator();
        c.is_proper = n != 1;
        if (!c.is_proper) return c;
        c.is_prime = n == 0 || (n > 1 && detail::integer_radical(n) == n && detail::is_prime_power(n));
        c.is_maximal = n > 1 && c.is_prime;
        c.is_primary = n == 0 || detail::is_prime_power(n);
        // nZZ + pZZ = ZZ for any prime p not dividing n, so only 0 is superfluous.
        c.is_superfluous = n == 0;
        return c;
    }
    return classify_ideal(I, *IdealLattice::build(R));
}

/// Z_I(R) = {r : rs in I for some s outside I}.
inline ElementSet z_set(const Ideal& I) {
    const Ring& R = I.ring();
    if (!R.is_finite()) throw AlgebraError(Errc::infinite_backend, "Z_I is not enumerable over ZZ; use in_z_set");
    ElementSet s(R.n());
    for (Index r = 0; r < R.n(); ++r)
        for (Index t = 0; t < R.n(); ++t)
            if (!I.contains(t) && I.contains(R.mul(r, t))) {
                s.set(r);
                break;
            }
    return s;
}

/// Membership in Z_I for either backend.
inline bool in_z_set(const Ideal& I, const Element& r) {
    const Ring& R = I.ring();
    R.check(r);
    if (R.is_finite()) return z_set(I).test(r.index());
    auto n = I.integer_generator();
    if (n == 1) return false;
    if (n == 0) return r.value() == 0;
    return detail::gcd64(r.value(), n) > 1;
}

struct SpecialSets {
    Ideal nilradical;
    Ideal jacobson;
    ElementSet zero_divisors;      // finite backends only
    ElementSet regular_elements;   // finite backends only
    ElementSet z_of_ideal;         // Z_I for the supplied ideal (zero ideal by default)
};

inline SpecialSets special_sets(const Ring& R, const std::optional<Ideal>& I = std::nullopt) {
    SpecialSets out;
    if (!R.is_finite()) {
        out.nilradical = Ideal::integer_multiples(R, 0);
        out.jacobson = Ideal::integer_multiples(R, 0);
        return out;
    }
    auto L = IdealLattice::build(R);
    out.nilradical = nilradical(R);
    out.jacobson = unit_ideal(R);
    for (auto m : L->maximal_indices()) out.jacobson = ideal_intersect(out.jacobson, (*L)[m]);
    out.zero_divisors = ElementSet(R.n());
    out.regular_elements = ElementSet(R.n());
    for (Index a = 0; a < R.n(); ++a) {
        bool zd = false;
        for (Index b = 0; b < R.n() && !zd; ++b) zd = b != R.zero_index() && R.mul(a, b) == R.zero_index();
        (zd ? out.zero_divisors : out.regular_elements).set(a);
    }
    out.z_of_ideal = z_set(I ? *I : zero_ideal(R));
    return out;
}

struct RingClass {
    bool is_field = false;
    bool is_integral_domain = false;
    bool is_reduced = false;
    bool is_von_neumann_regular = false;
    bool is_boolean = false;
    bool is_quasi_local = false;
    std::optional<Ideal> maximal_ideal;  // set iff quasi-local
};

inline RingClass classify_ring(const Ring& R, const IdealLattice& L) {
    RingClass c;
    const auto n = R.n();
    c.is_field = c.is_integral_domain = c.is_von_neumann_regular = c.is_boolean = true;
    for (Index a = 0; a < n; ++a) {
        bool unit = false, vnr = false;
        for (Index b = 0; b < n; ++b) {
            auto p = R.mul(a, b);
            if (p == R.one_index()) unit = true;
            if (p == R.zero_index() && a != R.zero_index() && b != R.zero_index()) c.is_integral_domain = false;
            if (R.mul(R.mul(a, a), b) == a) vnr = true;
        }
        if (a != R.zero_index() && !unit) c.is_field = false;
        if (!vnr) c.is_von_neumann_regular = false;
        if (R.mul(a, a) != a) c.is_boolean = false;
    }
    c.is_reduced = nilradical(R).is_zero();
    auto maxes = L.maximal_indices();
    if (maxes.size() == 1) {
        c.is_quasi_local = true;
        c.maximal_ideal = L[maxes[0]];
    }
    return c;
}

inline RingClass classify_ring(const Ring& R) {
    if (!R.is_finite()) {
        RingClass c;
        c.is_integral_domain = c.is_reduced = true;
        return c;
    }
    return classify_ring(R, *IdealLattice::build(R));
}

}  // namespace dni
