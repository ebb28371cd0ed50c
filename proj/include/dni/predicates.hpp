#pragma once

/**
 * @file predicates.hpp
 * @brief Decision procedures for n-ideals, delta-primary ideals and delta-n-ideals.
 *
 * Finite rings are decided by exhaustive scans. Every `check_*` function returns
 * a Verdict carrying the first counterexample found in enumeration order; the
 * `is_*` wrappers drop the witness. All predicates reject the improper ideal.
 */

#include <optional>
#include <string>
#include <vector>

#include "dni/expansion.hpp"

namespace dni {

enum class DeltaNMethod { definition, colon_criterion, element_ideal, ideal_pairs };

inline const char* method_name(DeltaNMethod m) {
    switch (m) {
        case DeltaNMethod::definition: return "definition";
        case DeltaNMethod::colon_criterion: return "colon_criterion";
        case DeltaNMethod::element_ideal: return "element_ideal";
        case DeltaNMethod::ideal_pairs: return "ideal_pairs";
    }
    return "?";
}

inline constexpr DeltaNMethod kAllMethods[] = {DeltaNMethod::definition, DeltaNMethod::colon_criterion,
                                               DeltaNMethod::element_ideal, DeltaNMethod::ideal_pairs};

struct Verdict {
    bool holds = true;
    std::vector<Element> elements;  // witness elements, e.g. a, b with ab in I
    std::vector<Ideal> ideals;      // witness ideals for the lattice-quantified methods
    std::string note;

    explicit operator bool() const { return holds; }
};

namespace detail {

inline void require_proper(const Ideal& I) {
    if (!I.is_proper())
        throw AlgebraError(Errc::improper_ideal, "the predicate applies to proper ideals only, got " + I.to_string() + " = R");
}

inline Verdict fail_pair(const Ring& R, std::int64_t a, std::int64_t b, std::string note) {
    return Verdict{false, {R.element(a), R.element(b)}, {}, std::move(note)};
}

/// ZZ: nZZ (n > 0) is delta-n iff delta(nZZ) = ZZ, since n*1 is in I and n is not nilpotent.
inline Verdict integer_delta_n(const Ideal& I, const Ideal& dI) {
    auto n = I.integer_generator();
    if (n == 0 || !dI.is_proper()) return {};
    return fail_pair(I.ring(), n, 1, "n*1 in I, n not nilpotent, 1 not in delta(I)");
}

}  // namespace detail

/// ab in I and a not in I imply b in delta(I).
inline Verdict check_delta_primary(const Ideal& I, const Expansion& d) {
    detail::require_proper(I);
    const Ring& R = I.ring();
    auto dI = d.apply(I);
    if (!R.is_finite()) {
        auto n = I.integer_generator();
        if (n == 0) return {};
        // ab in nZZ with a outside nZZ: the least such b is n/gcd(n,a); gcd(n,a) runs over proper divisors of n.
        for (std::int64_t g = 1; g < n; ++g)
            if (n % g == 0 && !dI.contains(R.element(n / g)))
                return detail::fail_pair(R, g, n / g, "ab in I, a not in I, b not in delta(I)");
        return {};
    }
    for (Index a = 0; a < R.n(); ++a) {
        if (I.contains(a)) continue;
        for (Index b = 0; b < R.n(); ++b)
            if (I.contains(R.mul(a, b)) && !dI.contains(b))
                return detail::fail_pair(R, a, b, "ab in I, a not in I, b not in delta(I)");
    }
    return {};
}

/// ab in I implies a in sqrt(0) or b in I.
inline Verdict check_n_ideal(const Ideal& I) {
    detail::require_proper(I);
    const Ring& R = I.ring();
    if (!R.is_finite()) return detail::integer_delta_n(I, I);
    auto nil = nilradical(R);
    for (Index a = 0; a < R.n(); ++a) {
        if (nil.contains(a)) continue;
        for (Index b = 0; b < R.n(); ++b)
            if (I.contains(R.mul(a, b)) && !I.contains(b))
                return detail::fail_pair(R, a, b, "ab in I, a not nilpotent, b not in I");
    }
    return {};
}

/**
 * Decides whether I is a delta-n-ideal by one of four equivalent criteria.
 * Over ZZ every method uses the closed-form criterion.
 */
inline Verdict check_delta_n_ideal(const Ideal& I, const Expansion& d, DeltaNMethod method = DeltaNMethod::definition) {
    detail::require_proper(I);
    const Ring& R = I.ring();
    auto dI = d.apply(I);
    if (!R.is_finite()) return detail::integer_delta_n(I, dI);
    auto nil = nilradical(R);
    const auto& L = d.lattice();
    switch (method) {
        case DeltaNMethod::definition:
            for (Index a = 0; a < R.n(); ++a) {
                if (nil.contains(a)) continue;
                for (Index b = 0; b < R.n(); ++b)
                    if (I.contains(R.mul(a, b)) && !dI.contains(b))
                        return detail::fail_pair(R, a, b, "ab in I, a not nilpotent, b not in delta(I)");
            }
            return {};
        case DeltaNMethod::colon_criterion:
            // (I:a) inside sqrt(0) for every a outside delta(I).
            for (Index a = 0; a < R.n(); ++a) {
                if (dI.contains(a)) continue;
                for (Index b = 0; b < R.n(); ++b)
                    if (I.contains(R.mul(a, b)) && !nil.contains(b))
                        return detail::fail_pair(R, a, b, "b in (I:a) outside sqrt(0) with a not in delta(I)");
            }
            return {};
        case DeltaNMethod::element_ideal:
            // aJ inside I implies a in sqrt(0) or J inside delta(I).
            for (const auto& J : L) {
                if (J.subset_of(dI)) continue;
                auto jm = J.elements().members();
                for (Index a = 0; a < R.n(); ++a) {
                    if (nil.contains(a)) continue;
                    bool inside = true;
                    for (auto j : jm)
                        if (!I.contains(R.mul(a, static_cast<Index>(j)))) {
                            inside = false;
                            break;
                        }
                    if (inside) return Verdict{false, {R.element(a)}, {J}, "aJ in I, a not nilpotent, J not in delta(I)"};
                }
            }
            return {};
        case DeltaNMethod::ideal_pairs:
            // JK inside I implies J inside sqrt(0) or K inside delta(I).
            for (const auto& J : L) {
                if (J.subset_of(nil)) continue;
                auto jm = J.elements().members();
                for (const auto& K : L) {
                    if (K.subset_of(dI)) continue;
                    bool inside = true;
                    auto km = K.elements().members();
                    for (auto j : jm) {
                        for (auto k : km)
                            if (!I.contains(R.mul(static_cast<Index>(j), static_cast<Index>(k)))) {
                                inside = false;
                                break;
                            }
                        if (!inside) break;
                    }
                    if (inside) return Verdict{false, {}, {J, K}, "JK in I, J not in sqrt(0), K not in delta(I)"};
                }
            }
            return {};
    }
    return {};
}

/**
 * The elements b with ab in I for some a outside sqrt(0). A proper ideal I is
 * a delta-n-ideal iff this set lies in delta(I), for every expansion delta.
 */
inline ElementSet obstruction_set(const Ideal& I, const Ideal& nil) {
    const Ring& R = I.ring();
    if (!R.is_finite()) throw AlgebraError(Errc::infinite_backend, "obstruction sets are computed on finite rings only");
    ElementSet out(R.n());
    for (Index a = 0; a < R.n(); ++a) {
        if (nil.contains(a)) continue;
        for (Index b = 0; b < R.n(); ++b)
            if (I.contains(R.mul(a, b))) out.set(b);
    }
    return out;
}

inline bool is_delta_primary(const Ideal& I, const Expansion& d) { return check_delta_primary(I, d).holds; }
inline bool is_n_ideal(const Ideal& I) { return check_n_ideal(I).holds; }
inline bool is_delta_n_ideal(const Ideal& I, const Expansion& d, DeltaNMethod m = DeltaNMethod::definition) {
    return check_delta_n_ideal(I, d, m).holds;
}

inline Verdict check_quasi_n_ideal(const Ideal& I) {
    detail::require_proper(I);
    return check_delta_n_ideal(I, make_expansion(I.ring(), ExpansionRecipe::d1()));
}
inline bool is_quasi_n_ideal(const Ideal& I) { return check_quasi_n_ideal(I).holds; }

struct DeltaNSpectrum {
    std::vector<Ideal> all;
    std::vector<Ideal> maximal_members;
};

inline DeltaNSpectrum delta_n_spectrum(const Expansion& d) {
    if (!d.finite()) throw AlgebraError(Errc::infinite_backend, "spectra are enumerated on finite rings only");
    DeltaNSpectrum s;
    for (const auto& I : d.lattice())
        if (I.is_proper() && is_delta_n_ideal(I, d)) s.all.push_back(I);
    for (const auto& I : s.all) {
        bool maximal = true;
        for (const auto& J : s.all)
            if (!(I == J) && I.subset_of(J)) maximal = false;
        if (maximal) s.maximal_members.push_back(I);
    }
    return s;
}

inline DeltaNSpectrum delta_n_spectrum(const Ring& R, const Expansion& d) {
    if (!(R == d.ring())) throw AlgebraError(Errc::cross_ring, "expansion is not on " + R.key());
    return delta_n_spectrum(d);
}

/// The delta-nilpotent elements form the ideal delta(0).
inline Ideal delta_nilpotents(const Ring& R, const Expansion& d) {
    if (!(R == d.ring())) throw AlgebraError(Errc::cross_ring, "expansion is not on " + R.key());
    return d.apply(zero_ideal(R));
}

}  // namespace dni
