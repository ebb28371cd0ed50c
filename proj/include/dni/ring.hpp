#pragma once

/**
 * @file ring.hpp
 * @brief Commutative rings with identity: finite table-driven backends and the symbolic integers.
 *
 * Every finite ring is realized as addition/multiplication/negation tables over
 * element indices 0..n-1. Index order is the canonical enumeration order of the
 * backend, so enumeration is stable across runs. The integers are handled by a
 * separate closed-form backend that refuses enumeration.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dni/error.hpp"
#include "dni/spec.hpp"

namespace dni {

/// Largest finite ring the table backend will build.
inline constexpr std::size_t kMaxRingSize = 4096;
/// Rings up to this size get an exhaustive axiom check; larger ones are sampled.
inline constexpr std::size_t kExhaustiveAxiomCheck = 256;
inline constexpr std::size_t kSampledAxiomTriples = 10000;

using Index = std::uint32_t;

struct RingImpl {
    RingSpec spec;
    std::string key;
    bool infinite = false;

    std::size_t n = 0;
    std::vector<Index> add, mul, neg;
    Index zero = 0, one = 0;

    std::function<ElemExpr(Index)> to_expr;
    std::function<Index(const ElemExpr&)> from_expr;
};

class Ring;

/// Immutable value of a specific ring. For finite rings `value` is the element index.
class Element {
public:
    Element() = default;
    Element(std::shared_ptr<const RingImpl> ring, std::int64_t value) : ring_(std::move(ring)), value_(value) {}

    std::int64_t value() const { return value_; }
    Index index() const { return static_cast<Index>(value_); }
    const RingImpl* ring_impl() const { return ring_.get(); }

    friend bool operator==(const Element& a, const Element& b) {
        return a.value_ == b.value_ && (a.ring_ == b.ring_ || (a.ring_ && b.ring_ && a.ring_->key == b.ring_->key));
    }

private:
    std::shared_ptr<const RingImpl> ring_;
    std::int64_t value_ = 0;
};

namespace detail {

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
    auto r = a % n;
    return r < 0 ? r + n : r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw AlgebraError(Errc::too_large, "integer overflow in multiplication");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw AlgebraError(Errc::too_large, "integer overflow in addition");
    return r;
}

inline std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n) {
    std::int64_t t = 0, nt = 1, r = n, nr = mod(a, n);
    while (nr) {
        auto q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) return std::nullopt;
    return mod(t, n);
}

inline std::atomic<std::uint64_t>& ring_counter() {
    static std::atomic<std::uint64_t> c{0};
    return c;
}

}  // namespace detail

/**
 * Handle to an immutable ring. Copies share the same tables.
 *
 * Two rings are equal when their construction recipes are equal; isomorphic
 * rings built from different recipes are different rings.
 */
class Ring {
public:
    Ring() = default;
    explicit Ring(std::shared_ptr<const RingImpl> impl) : impl_(std::move(impl)) {}

    const RingSpec& spec() const { return impl_->spec; }
    const std::string& key() const { return impl_->key; }
    bool is_finite() const { return !impl_->infinite; }
    /// Number of elements; nullopt for the integers.
    std::optional<std::size_t> size() const {
        if (impl_->infinite) return std::nullopt;
        return impl_->n;
    }
    std::size_t n() const { return impl_->n; }
    const RingImpl& impl() const { return *impl_; }
    const std::shared_ptr<const RingImpl>& impl_ptr() const { return impl_; }

    /// Finite rings take an enumeration index, ZZ takes the integer itself.
    Element element(std::int64_t value) const {
        if (!impl_->infinite && (value < 0 || value >= static_cast<std::int64_t>(impl_->n)))
            throw AlgebraError(Errc::invalid_spec, "index " + std::to_string(value) + " out of range for " + key());
        return Element(impl_, value);
    }
    Element zero() const { return element(impl_->infinite ? 0 : impl_->zero); }
    Element one() const { return element(impl_->infinite ? 1 : impl_->one); }

    // Index-level arithmetic for finite rings.
    Index add(Index a, Index b) const { return impl_->add[a * impl_->n + b]; }
    Index mul(Index a, Index b) const { return impl_->mul[a * impl_->n + b]; }
    Index neg(Index a) const { return impl_->neg[a]; }
    Index sub(Index a, Index b) const { return add(a, neg(b)); }
    Index zero_index() const { return impl_->zero; }
    Index one_index() const { return impl_->one; }

    void check(const Element& a) const {
        if (!owns(a)) throw AlgebraError(Errc::cross_ring, "element does not belong to " + key());
    }
    bool owns(const Element& a) const {
        return a.ring_impl() == impl_.get() || (a.ring_impl() && a.ring_impl()->key == impl_->key);
    }

    Element add(const Element& a, const Element& b) const {
        check(a), check(b);
        if (impl_->infinite) return element(detail::checked_add(a.value(), b.value()));
        return element(add(a.index(), b.index()));
    }
    Element mul(const Element& a, const Element& b) const {
        check(a), check(b);
        if (impl_->infinite) return element(detail::checked_mul(a.value(), b.value()));
        return element(mul(a.index(), b.index()));
    }
    Element neg(const Element& a) const {
        check(a);
        if (impl_->infinite) return element(-a.value());
        return element(neg(a.index()));
    }
    Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

    Element pow(const Element& a, std::uint64_t k) const {
        Element r = one(), base = a;
        while (k) {
            if (k & 1) r = mul(r, base);
            base = mul(base, base);
            k >>= 1;
        }
        return r;
    }

    /// Binds an unbound literal, reducing it to canonical form.
    Element bind(const ElemExpr& e) const {
        if (impl_->infinite) {
            if (e.kind != ElemExpr::Kind::poly || e.normalized().coeffs.size() != 1)
                throw AlgebraError(Errc::invalid_spec, "integer literal expected in ZZ, got " + to_string(e));
            return element(e.coeffs[0]);
        }
        return element(impl_->from_expr(e));
    }

    ElemExpr expr(const Element& a) const {
        check(a);
        if (impl_->infinite) return ElemExpr::integer(a.value());
        return impl_->to_expr(a.index());
    }
    ElemExpr expr(Index a) const { return impl_->to_expr(a); }

    std::string format(const Element& a) const { return to_string(expr(a)); }
    std::string format(Index a) const { return to_string(impl_->to_expr(a)); }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.impl_ == b.impl_ || (a.impl_ && b.impl_ && a.impl_->key == b.impl_->key);
    }

private:
    std::shared_ptr<const RingImpl> impl_;
};

enum class ArithOp { add, mul, neg };

inline Element arithmetic(const Ring& r, ArithOp op, const Element& a, const std::optional<Element>& b = std::nullopt) {
    switch (op) {
        case ArithOp::add:
            if (!b) throw AlgebraError(Errc::invalid_spec, "add needs two operands");
            return r.add(a, *b);
        case ArithOp::mul:
            if (!b) throw AlgebraError(Errc::invalid_spec, "mul needs two operands");
            return r.mul(a, *b);
        case ArithOp::neg: return r.neg(a);
    }
    return a;
}

inline std::vector<Element> list_elements(const Ring& r) {
    if (!r.is_finite()) throw AlgebraError(Errc::infinite_backend, "cannot enumerate elements of " + r.key());
    std::vector<Element> out;
    out.reserve(r.n());
    for (std::size_t i = 0; i < r.n(); ++i) out.push_back(r.element(static_cast<std::int64_t>(i)));
    return out;
}

/**
 * Checks commutativity, associativity, distributivity, identities and 0 != 1.
 * Exhaustive up to kExhaustiveAxiomCheck elements, sampled beyond.
 */
inline void check_ring_axioms(const RingImpl& R) {
    const auto n = R.n;
    auto A = [&](Index a, Index b) { return R.add[a * n + b]; };
    auto M = [&](Index a, Index b) { return R.mul[a * n + b]; };
    auto fail = [&](const std::string& what) { throw AlgebraError(Errc::axiom_violation, R.key + ": " + what); };
    if (R.zero == R.one) fail("0 == 1");
    for (Index a = 0; a < n; ++a) {
        if (A(a, R.zero) != a) fail("additive identity");
        if (M(a, R.one) != a) fail("multiplicative identity");
        if (A(a, R.neg[a]) != R.zero) fail("additive inverse");
        for (Index b = 0; b < n; ++b)
            if (A(a, b) != A(b, a) || M(a, b) != M(b, a)) fail("commutativity");
    }
    auto triple = [&](Index a, Index b, Index c) {
        if (A(A(a, b), c) != A(a, A(b, c))) fail("additive associativity");
        if (M(M(a, b), c) != M(a, M(b, c))) fail("multiplicative associativity");
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) fail("distributivity");
    };
    if (n <= kExhaustiveAxiomCheck) {
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                for (Index c = 0; c < n; ++c) triple(a, b, c);
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
        for (std::size_t k = 0; k < kSampledAxiomTriples; ++k) triple(pick(rng), pick(rng), pick(rng));
    }
}

namespace detail {

inline std::shared_ptr<RingImpl> new_impl(const RingSpec& spec, std::size_t n) {
    if (n > kMaxRingSize)
        throw AlgebraError(Errc::too_large, to_string(spec) + " has " + std::to_string(n) + " elements");
    auto impl = std::make_shared<RingImpl>();
    impl->spec = spec;
    impl->key = to_string(spec);
    impl->n = n;
    impl->add.resize(n * n);
    impl->mul.resize(n * n);
    impl->neg.resize(n);
    return impl;
}

/// Fills negation by table search and runs the axiom check.
inline std::shared_ptr<const RingImpl> finish_impl(std::shared_ptr<RingImpl> impl) {
    const auto n = impl->n;
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (impl->add[a * n + b] == impl->zero) {
                impl->neg[a] = b;
                break;
            }
    check_ring_axioms(*impl);
    return impl;
}

inline std::int64_t expect_integer(const ElemExpr& e, const std::string& where) {
    auto x = e.normalized();
    if (x.kind != ElemExpr::Kind::poly || x.coeffs.size() != 1)
        throw AlgebraError(Errc::invalid_spec, "integer literal expected in " + where + ", got " + to_string(e));
    return x.coeffs[0];
}

}  // namespace detail

inline Ring make_integer_ring() {
    auto impl = std::make_shared<RingImpl>();
    impl->spec = RingSpec::integers();
    impl->key = to_string(impl->spec);
    impl->infinite = true;
    return Ring(impl);
}

inline Ring make_modular_ring(std::int64_t n) {
    if (n < 2) throw AlgebraError(Errc::invalid_spec, "modulus must be at least 2, got " + std::to_string(n));
    auto spec = RingSpec::modular_ring(n);
    auto impl = detail::new_impl(spec, static_cast<std::size_t>(n));
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) {
            impl->add[a * n + b] = static_cast<Index>((a + b) % n);
            impl->mul[a * n + b] = static_cast<Index>((a * b) % n);
        }
    impl->zero = 0;
    impl->one = 1;
    impl->to_expr = [](Index a) { return ElemExpr::integer(a); };
    impl->from_expr = [n, key = impl->key](const ElemExpr& e) {
        return static_cast<Index>(detail::mod(detail::expect_integer(e, key), n));
    };
    return Ring(detail::finish_impl(impl));
}

namespace detail {

/// Reduces an integer polynomial modulo (n, f) to exactly deg(f) coefficients in [0, n).
inline std::vector<std::int64_t> reduce_poly(std::vector<std::int64_t> c, const std::vector<std::int64_t>& f,
                                             std::int64_t n, std::int64_t lead_inv) {
    const auto d = f.size() - 1;
    for (auto& v : c) v = mod(v, n);
    for (std::size_t k = c.size(); k-- > d;) {
        auto t = (c[k] * lead_inv) % n;
        if (!t) continue;
        for (std::size_t j = 0; j <= d; ++j) c[k - d + j] = mod(c[k - d + j] - t * f[j], n);
    }
    c.resize(d, 0);
    return c;
}

}  // namespace detail

/// Z_n[x]/(f). The leading coefficient of f must be a unit mod n and deg f >= 1.
inline Ring make_poly_quotient_ring(const RingSpec& base, std::vector<std::int64_t> f) {
    if (base.kind != RingSpec::Kind::modular)
        throw AlgebraError(Errc::invalid_spec, "polynomial quotients need a modular base, got " + to_string(base));
    const auto n = base.modulus;
    if (n < 2) throw AlgebraError(Errc::invalid_spec, "modulus must be at least 2");
    for (auto& v : f) v = detail::mod(v, n);
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() < 2) throw AlgebraError(Errc::invalid_spec, "modulus polynomial must have degree >= 1");
    auto lead_inv = detail::inverse_mod(f.back(), n);
    if (!lead_inv)
        throw AlgebraError(Errc::invalid_spec, "leading coefficient of the modulus is not a unit mod " + std::to_string(n));
    const auto d = f.size() - 1;
    std::size_t size = 1;
    for (std::size_t k = 0; k < d; ++k) {
        size *= static_cast<std::size_t>(n);
        if (size > kMaxRingSize) throw AlgebraError(Errc::too_large, "polynomial quotient exceeds table limit");
    }
    auto spec = RingSpec::poly_quotient_ring(base, f);
    auto impl = detail::new_impl(spec, size);

    auto decode = [n, d](Index idx) {
        std::vector<std::int64_t> c(d);
        for (std::size_t k = 0; k < d; ++k) {
            c[k] = idx % n;
            idx = static_cast<Index>(idx / n);
        }
        return c;
    };
    auto encode = [n, d](const std::vector<std::int64_t>& c) {
        Index idx = 0;
        for (std::size_t k = d; k-- > 0;) idx = static_cast<Index>(idx * n + c[k]);
        return idx;
    };
    std::vector<std::vector<std::int64_t>> coeffs(size);
    for (Index i = 0; i < size; ++i) coeffs[i] = decode(i);
    for (Index a = 0; a < size; ++a)
        for (Index b = 0; b < size; ++b) {
            std::vector<std::int64_t> s(d), p(2 * d - 1, 0);
            for (std::size_t k = 0; k < d; ++k) s[k] = (coeffs[a][k] + coeffs[b][k]) % n;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) p[i + j] = (p[i + j] + coeffs[a][i] * coeffs[b][j]) % n;
            impl->add[a * size + b] = encode(s);
            impl->mul[a * size + b] = encode(detail::reduce_poly(std::move(p), f, n, *lead_inv));
        }
    impl->zero = 0;
    impl->one = encode(detail::reduce_poly({1}, f, n, *lead_inv));
    impl->to_expr = [decode](Index a) { return ElemExpr::polynomial(decode(a)).normalized(); };
    impl->from_expr = [encode, f, n, li = *lead_inv, key = impl->key](const ElemExpr& e) {
        if (e.kind != ElemExpr::Kind::poly)
            throw AlgebraError(Errc::invalid_spec, "polynomial literal expected in " + key + ", got " + to_string(e));
        return encode(detail::reduce_poly(e.coeffs, f, n, li));
    };
    return Ring(detail::finish_impl(impl));
}

/// R1 x R2 with componentwise operations; index = i1 * |R2| + i2.
inline Ring make_product_ring(const Ring& left, const Ring& right) {
    if (!left.is_finite() || !right.is_finite())
        throw AlgebraError(Errc::infinite_backend, "products need finite components");
    const auto n1 = left.n(), n2 = right.n(), n = n1 * n2;
    auto spec = RingSpec::product_ring(left.spec(), right.spec());
    auto impl = detail::new_impl(spec, n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            Index a1 = a / n2, a2 = a % n2, b1 = b / n2, b2 = b % n2;
            impl->add[a * n + b] = static_cast<Index>(left.add(a1, b1) * n2 + right.add(a2, b2));
            impl->mul[a * n + b] = static_cast<Index>(left.mul(a1, b1) * n2 + right.mul(a2, b2));
        }
    impl->zero = static_cast<Index>(left.zero_index() * n2 + right.zero_index());
    impl->one = static_cast<Index>(left.one_index() * n2 + right.one_index());
    impl->to_expr = [left, right, n2](Index a) {
        return ElemExpr::pair(left.expr(static_cast<Index>(a / n2)), right.expr(static_cast<Index>(a % n2)));
    };
    impl->from_expr = [left, right, n2, key = impl->key](const ElemExpr& e) {
        if (e.kind != ElemExpr::Kind::pair)
            throw AlgebraError(Errc::invalid_spec, "pair <a,b> expected in " + key + ", got " + to_string(e));
        return static_cast<Index>(left.bind(e.parts[0]).index() * n2 + right.bind(e.parts[1]).index());
    };
    return Ring(detail::finish_impl(impl));
}

// ---------------------------------------------------------------------------
// Element classification

struct ElementClass {
    bool is_zero = false;
    bool is_unit = false;
    bool is_nilpotent = false;
    unsigned nilpotency_index = 0;  // least k with a^k = 0, when nilpotent
    bool is_zero_divisor = false;   // some nonzero b with ab = 0 (0 counts as a zero divisor)
    bool is_regular = false;        // ann(a) = 0
    bool is_idempotent = false;
};

inline ElementClass classify_element(const Ring& R, const Element& a) {
    R.check(a);
    ElementClass c;
    if (!R.is_finite()) {
        auto v = a.value();
        c.is_zero = v == 0;
        c.is_unit = v == 1 || v == -1;
        c.is_nilpotent = v == 0;
        c.nilpotency_index = v == 0 ? 1 : 0;
        c.is_zero_divisor = v == 0;
        c.is_regular = v != 0;
        c.is_idempotent = v == 0 || v == 1;
        return c;
    }
    const auto x = a.index();
    c.is_zero = x == R.zero_index();
    c.is_idempotent = R.mul(x, x) == x;
    for (Index b = 0; b < R.n(); ++b) {
        auto p = R.mul(x, b);
        if (p == R.one_index()) c.is_unit = true;
        if (p == R.zero_index() && b != R.zero_index()) c.is_zero_divisor = true;
    }
    c.is_regular = !c.is_zero_divisor;
    Index p = x;
    for (unsigned k = 1; k <= R.n(); ++k) {
        if (p == R.zero_index()) {
            c.is_nilpotent = true;
            c.nilpotency_index = k;
            break;
        }
        p = R.mul(p, x);
    }
    return c;
}

}  // namespace dni
