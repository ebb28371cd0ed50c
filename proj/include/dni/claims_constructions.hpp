#pragma once

/**
 * @file claims_constructions.hpp
 * @brief Claims quantified over homomorphisms, quotients, localizations,
 * products and idealizations built from the corpus rings.
 */

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dni/instance.hpp"

namespace dni::construction_claims {

inline std::vector<Expansion> basic_expansions(const RingData& r) {
    std::vector<Expansion> out;
    for (const auto& recipe : basic_catalog_recipes(r.lattice())) out.push_back(make_expansion(r.ring(), recipe, r.lattice_ptr()));
    return out;
}

inline std::vector<Expansion> catalog_expansions(const RingData& r) {
    std::vector<Expansion> out;
    for (const auto& recipe : catalog_recipes(r.lattice())) out.push_back(make_expansion(r.ring(), recipe, r.lattice_ptr()));
    return out;
}

inline std::vector<Expansion> corpus_expansions(const RingData& r) {
    std::vector<Expansion> out;
    for (const auto& e : r.expansions) out.push_back(e.d);
    return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

/// A homomorphism with the expansion pairs (delta on the source, gamma on the target) to test.
struct HomCase {
    std::string name;
    Homomorphism f;
    std::shared_ptr<const RingData> src, dst;
    std::vector<Expansion> src_exps, dst_exps;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    void all_pairs() {
        for (std::size_t a = 0; a < src_exps.size(); ++a)
            for (std::size_t b = 0; b < dst_exps.size(); ++b) pairs.emplace_back(a, b);
    }
};

inline std::shared_ptr<const RingData> shared_data(const RingData& r) {
    return std::shared_ptr<const RingData>(std::shared_ptr<const RingData>{}, &r);
}

/// Embeddings: base -> base[x]/(f), base -> base(+)M, and the diagonal R -> R x R.
inline std::vector<HomCase> mono_cases(const Context& c) {
    std::vector<HomCase> out;
    for (const auto& rp : c.rings) {
        const auto& spec = rp->spec();
        const Ring& T = rp->ring();
        auto embed = [&](const Ring& base, std::vector<Index> table, std::string name) {
            auto src = std::make_shared<RingData>(base);
            HomCase h{std::move(name), make_homomorphism(base, T, std::move(table)), src, shared_data(*rp), basic_expansions(*src),
                      corpus_expansions(*rp), {}};
            h.all_pairs();
            out.push_back(std::move(h));
        };
        if (spec.kind == RingSpec::Kind::poly_quotient) {
            auto base = construct_ring(spec.children[0]);
            std::vector<Index> t;
            for (Index a = 0; a < base.n(); ++a) t.push_back(T.bind(base.expr(a)).index());
            embed(base, std::move(t), to_string(base.spec()) + " -> " + rp->name());
        } else if (spec.kind == RingSpec::Kind::idealization) {
            auto base = construct_ring(spec.children[0]);
            auto ide = idealization(base, make_module(base, spec.children[1]));
            std::vector<Index> t;
            for (Index a = 0; a < base.n(); ++a) t.push_back(ide.pair_index(a, ide.module.zero()));
            embed(base, std::move(t), to_string(base.spec()) + " -> " + rp->name());
        } else if (spec.kind == RingSpec::Kind::product && spec.children[0] == spec.children[1]) {
            auto base = construct_ring(spec.children[0]);
            std::vector<Index> t;
            for (Index a = 0; a < base.n(); ++a) t.push_back(static_cast<Index>(a * base.n() + a));
            embed(base, std::move(t), "diagonal " + to_string(base.spec()) + " -> " + rp->name());
        }
    }
    return out;
}

/// Projections R -> R/J for nonzero proper J, and R1 x R2 -> Ri.
inline std::vector<HomCase> epi_cases(const Context& c) {
    std::vector<HomCase> out;
    for (const auto& rp : c.rings) {
        const auto& r = *rp;
        for (std::size_t j = 1; j < r.size(); ++j) {
            if (!r.proper(j)) continue;
            auto& qd = c.quotient(r, j);
            HomCase h{r.name() + " -> " + qd.data->name(), qd.q.projection, shared_data(r), qd.data, corpus_expansions(r), {}, {}};
            for (auto recipe : {ExpansionRecipe::d0(), ExpansionRecipe::d1(), ExpansionRecipe::full()})
                h.dst_exps.push_back(make_expansion(qd.data->ring(), recipe, qd.data->lattice_ptr()));
            for (std::size_t e = 0; e < r.expansions.size(); ++e) {
                for (std::size_t g = 0; g < 3; ++g) h.pairs.emplace_back(e, g);
                h.dst_exps.push_back(c.derived(qd, r, e));
                h.pairs.emplace_back(e, h.dst_exps.size() - 1);
            }
            out.push_back(std::move(h));
        }
        if (r.spec().kind != RingSpec::Kind::product) continue;
        auto R1 = construct_ring(r.spec().children[0]), R2 = construct_ring(r.spec().children[1]);
        auto d1 = std::make_shared<RingData>(R1), d2 = std::make_shared<RingData>(R2);
        auto e1 = basic_expansions(*d1), e2 = basic_expansions(*d2);
        auto src = corpus_expansions(r);
        for (const auto& a : e1)
            for (const auto& b : e2) src.push_back(derive_product_expansion(a, b, r.lattice_ptr()));
        const auto n2 = R2.n();
        for (int side = 0; side < 2; ++side) {
            const auto& target = side ? d2 : d1;
            std::vector<Index> t;
            for (Index p = 0; p < r.ring().n(); ++p) t.push_back(static_cast<Index>(side ? p % n2 : p / n2));
            HomCase h{r.name() + " -> " + target->name(), make_homomorphism(r.ring(), target->ring(), std::move(t)), shared_data(r),
                      target, src, side ? e2 : e1, {}};
            h.all_pairs();
            out.push_back(std::move(h));
        }
    }
    return out;
}

inline Witness hom_witness(const HomCase& h, const Expansion& d, const Expansion& g, std::vector<Ideal> ideals, std::string note = {}) {
    Witness w{h.src->name(), d.to_string() + " / " + g.to_string(), {}, {}, "f: " + h.name + (note.empty() ? "" : "; " + note)};
    for (const auto& I : ideals) w.ideals.push_back(I.to_string());
    return w;
}

inline void radical_compatible(const Context& c, Tally& t) {
    auto cases = mono_cases(c);
    for (auto& h : epi_cases(c)) cases.push_back(std::move(h));
    for (const auto& h : cases)
        for (const auto& J : h.dst->lattice()) {
            bool ok = radical(preimage_ideal(h.f, J)) == preimage_ideal(h.f, radical(J));
            t.check(ok, [&] { return Witness{h.src->name(), "", {J.to_string()}, {}, "f: " + h.name}; });
        }
}

inline void hom_transfer_mono(const Context& c, Tally& t) {
    for (const auto& h : mono_cases(c))
        for (auto [a, b] : h.pairs) {
            const auto &d = h.src_exps[a], &g = h.dst_exps[b];
            bool hom = is_delta_gamma_homomorphism(h.f, d, g);
            for (std::size_t j = 0; j < h.dst->size(); ++j) {
                if (!h.dst->proper(j)) continue;
                bool hyp = hom && h.dst->delta_n(g, j);
                if (!hyp) {
                    t.hypothesis_not_met();
                    continue;
                }
                auto pre = preimage_ideal(h.f, (*h.dst)[j]);
                t.check(h.src->delta_n(d, h.src->index_of(pre)), [&] { return hom_witness(h, d, g, {(*h.dst)[j], pre}); });
            }
        }
}

template <class Conclusion>
void each_epi_instance(const Context& c, Tally& t, Conclusion&& concl) {
    for (const auto& h : epi_cases(c)) {
        std::vector<std::size_t> above;
        for (std::size_t i = 0; i < h.src->size(); ++i)
            if (h.src->proper(i) && h.f.kernel().subset_of((*h.src)[i])) above.push_back(i);
        for (auto [a, b] : h.pairs) {
            const auto &d = h.src_exps[a], &g = h.dst_exps[b];
            bool hom = is_delta_gamma_homomorphism(h.f, d, g);
            for (auto i : above) concl(h, d, g, hom, i);
        }
    }
    (void)t;
}

inline void epi_image(const Context& c, Tally& t) {
    each_epi_instance(c, t, [&](const HomCase& h, const Expansion& d, const Expansion& g, bool hom, std::size_t i) {
        if (!hom) return t.hypothesis_not_met();
        const auto& I = (*h.src)[i];
        bool ok = g.apply(image_ideal(h.f, I)) == image_ideal(h.f, d.apply(I));
        t.check(ok, [&] { return hom_witness(h, d, g, {I}); });
    });
}

inline void hom_transfer_epi(const Context& c, Tally& t) {
    each_epi_instance(c, t, [&](const HomCase& h, const Expansion& d, const Expansion& g, bool hom, std::size_t i) {
        if (!hom || !h.src->delta_n(d, i)) return t.hypothesis_not_met();
        auto img = image_ideal(h.f, (*h.src)[i]);
        t.check(h.dst->delta_n(g, h.dst->index_of(img)), [&] { return hom_witness(h, d, g, {(*h.src)[i], img}); });
    });
}

// ---------------------------------------------------------------------------
// Quotients

/// Calls f(r, e, j, i, qd, dq, k) for J = r[j] inside the proper ideal I = r[i], with k the index of I/J.
template <class F>
void each_quotient_instance(const Context& c, F&& f) {
    for (const auto& rp : c.rings) {
        const auto& r = *rp;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (!r.proper(j)) continue;
            auto& qd = c.quotient(r, j);
            std::vector<std::pair<std::size_t, std::size_t>> above;
            for (std::size_t i = 0; i < r.size(); ++i)
                if (r.proper(i) && r.subset(j, i)) above.emplace_back(i, qd.data->index_of(qd.q.image(r[i])));
            for (std::size_t e = 0; e < r.expansions.size(); ++e) {
                const auto& dq = c.derived(qd, r, e);
                for (auto [i, k] : above) f(r, e, j, i, qd, dq, k);
            }
        }
    }
}

inline Witness quotient_witness(const RingData& r, std::size_t e, std::size_t j, std::size_t i) {
    return make_witness(r, &r.expansions[e].d, {r[j], r[i]}, {}, "J = first ideal, I = second ideal");
}

inline void quotient_transfer(const Context& c, Tally& t) {
    each_quotient_instance(c, [&](const RingData& r, std::size_t e, std::size_t j, std::size_t i, const QuotientData& qd,
                                  const Expansion& dq, std::size_t k) {
        t.implication(r.delta_n(r.expansions[e].d, i), qd.data->delta_n(dq, k), [&] { return quotient_witness(r, e, j, i); });
    });
}

inline void quotient_lift_nil(const Context& c, Tally& t) {
    each_quotient_instance(c, [&](const RingData& r, std::size_t e, std::size_t j, std::size_t i, const QuotientData& qd,
                                  const Expansion& dq, std::size_t k) {
        bool hyp = r.subset(j, r.nil_index()) && qd.data->delta_n(dq, k);
        t.implication(hyp, r.delta_n(r.expansions[e].d, i), [&] { return quotient_witness(r, e, j, i); });
    });
}

inline void quotient_lift_dn(const Context& c, Tally& t) {
    each_quotient_instance(c, [&](const RingData& r, std::size_t e, std::size_t j, std::size_t i, const QuotientData& qd,
                                  const Expansion& dq, std::size_t k) {
        const auto& d = r.expansions[e].d;
        bool hyp = r.delta_n(d, j) && r.value_proper(d, j) && qd.data->delta_n(dq, k);
        t.implication(hyp, r.delta_n(d, i), [&] { return quotient_witness(r, e, j, i); });
    });
}

// ---------------------------------------------------------------------------
// Localizations

struct LocalizationCase {
    const RingData* r;
    Localization loc;
    std::shared_ptr<RingData> data;
    std::vector<Expansion> derived;  // one per corpus expansion of r
    std::size_t colliding = 0;       // expansions whose delta_S depends on the representative
};

/// Closures of single non-nilpotent non-units, plus the regular elements (regular_only selects just those).
inline std::vector<LocalizationCase> localization_cases(const Context& c, bool regular_only) {
    std::vector<LocalizationCase> out;
    for (const auto& rp : c.rings) {
        const auto& r = *rp;
        const Ring& R = r.ring();
        auto sets = special_sets(R);
        std::vector<MultiplicativeSet> mult;
        std::vector<Index> regular;
        for (auto x : sets.regular_elements.members()) regular.push_back(static_cast<Index>(x));
        mult.push_back(multiplicative_closure(R, regular));
        if (!regular_only) {
            std::set<ElementSet> seen{mult.back().members};
            for (Index s = 0; s < R.n(); ++s) {
                if (r.nil().contains(s) || sets.regular_elements.test(s)) continue;
                auto m = multiplicative_closure(R, {s});
                if (seen.insert(m.members).second) mult.push_back(std::move(m));
            }
        }
        for (auto& S : mult) {
            LocalizationCase lc{&r, localize(R, S), nullptr, {}, 0};
            lc.data = std::make_shared<RingData>(lc.loc.ring);
            for (const auto& e : r.expansions) {
                lc.derived.push_back(derive_localized_expansion(e.d, lc.loc, lc.data->lattice_ptr()));
                lc.colliding += !localized_collisions(e.d, lc.loc).empty();
            }
            out.push_back(std::move(lc));
        }
    }
    return out;
}

inline std::string set_text(const LocalizationCase& lc) {
    std::string s = "S = {";
    bool first = true;
    lc.loc.set.members.for_each([&](std::size_t x) {
        s += (first ? "" : ",") + lc.r->ring().format(static_cast<Index>(x));
        first = false;
    });
    return s + "}";
}

inline void collision_note(Tally& t, const std::vector<LocalizationCase>& cases) {
    std::size_t n = 0, total = 0;
    for (const auto& lc : cases) n += lc.colliding, total += lc.derived.size();
    t.note(std::to_string(n) + " of " + std::to_string(total) +
           " (ring, S, delta) triples give a delta_S that depends on the chosen preimage; the contraction is used");
}

inline void localization_transfer(const Context& c, Tally& t) {
    auto cases = localization_cases(c, false);
    for (const auto& lc : cases) {
        const auto& r = *lc.r;
        for (std::size_t e = 0; e < lc.derived.size(); ++e) {
            const auto& d = r.expansions[e].d;
            each_proper_index(r, [&](std::size_t i) {
                bool hyp = !r[i].elements().intersects(lc.loc.set.members) && r.delta_n(d, i);
                if (!hyp) return t.hypothesis_not_met();
                auto ext = lc.loc.extend(r[i]);
                t.check(lc.data->delta_n(lc.derived[e], lc.data->index_of(ext)),
                        [&] { return make_witness(r, &d, {r[i]}, {}, set_text(lc)); });
            });
        }
    }
    collision_note(t, cases);
}

inline void localization_lift(const Context& c, Tally& t) {
    auto cases = localization_cases(c, false);
    for (const auto& lc : cases) {
        const auto& r = *lc.r;
        bool avoids_zd = !lc.loc.set.members.intersects(special_sets(r.ring()).zero_divisors);
        for (std::size_t e = 0; e < lc.derived.size(); ++e) {
            const auto& d = r.expansions[e].d;
            each_proper_index(r, [&](std::size_t i) {
                auto ext = lc.loc.extend(r[i]);
                auto k = lc.data->index_of(ext);
                bool hyp = avoids_zd && !lc.loc.set.members.intersects(z_set(d.apply(r[i]))) && lc.data->delta_n(lc.derived[e], k);
                t.implication(hyp, r.delta_n(d, i), [&] { return make_witness(r, &d, {r[i]}, {}, set_text(lc)); });
            });
        }
    }
    collision_note(t, cases);
}

inline void regular_contraction(const Context& c, Tally& t) {
    for (const auto& lc : localization_cases(c, true)) {
        const auto& r = *lc.r;
        for (std::size_t e = 0; e < lc.derived.size(); ++e) {
            const auto& d = r.expansions[e].d;
            for (std::size_t k = 0; k < lc.data->size(); ++k) {
                if (!lc.data->proper(k)) continue;
                auto con = lc.loc.contract((*lc.data)[k]);
                t.implication(lc.data->delta_n(lc.derived[e], k), r.delta_n(d, r.index_of(con)),
                              [&] { return make_witness(r, &d, {con}, {}, set_text(lc)); });
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Products and idealizations

struct ProductPair {
    const RingData* r;
    Expansion d;
};

inline std::vector<ProductPair> product_pairs(const Context& c) {
    std::vector<ProductPair> out;
    for (const auto& rp : c.rings) {
        if (rp->spec().kind != RingSpec::Kind::product) continue;
        RingData d1(construct_ring(rp->spec().children[0])), d2(construct_ring(rp->spec().children[1]));
        for (const auto& a : catalog_expansions(d1))
            for (const auto& b : catalog_expansions(d2)) out.push_back({rp.get(), derive_product_expansion(a, b, rp->lattice_ptr())});
    }
    return out;
}

inline void product_obstruction(const Context& c, Tally& t) {
    for (const auto& p : product_pairs(c))
        each_proper_index(*p.r, [&](std::size_t i) {
            t.implication(p.r->value_proper(p.d, i), !p.r->delta_n(p.d, i), [&] { return make_witness(*p.r, &p.d, {(*p.r)[i]}); });
        });
}

inline void product_obstruction_literal(const Context& c, Tally& t) {
    for (const auto& p : product_pairs(c)) {
        bool some_proper = false;
        std::optional<std::size_t> member;
        each_proper_index(*p.r, [&](std::size_t i) {
            some_proper = some_proper || p.r->value_proper(p.d, i);
            if (!member && p.r->delta_n(p.d, i)) member = i;
        });
        t.implication(some_proper, !member, [&] { return make_witness(*p.r, &p.d, {(*p.r)[*member]}); });
    }
}

inline void idealization_equivalence(const Context& c, Tally& t) {
    for (const auto& rp : c.rings) {
        const auto& r = *rp;
        if (r.spec().kind != RingSpec::Kind::idealization) continue;
        auto base = construct_ring(r.spec().children[0]);
        RingData bd(base);
        auto ide = idealization(base, make_module(base, r.spec().children[1]));
        auto subs = enumerate_submodules(ide.module);
        std::size_t mixed = 0;
        for (const auto& K : r.lattice()) mixed += !ide.is_homogeneous(K);
        t.note(r.name() + ": " + std::to_string(mixed) + " of " + std::to_string(r.size()) +
               " ideals are not of the form I(+)N and are left out");
        for (const auto& d : catalog_expansions(bd)) {
            auto dp = derive_idealization_expansion(d, ide, r.lattice_ptr());
            each_proper_index(bd, [&](std::size_t i) {
                for (const auto& N : subs) {
                    if (!ide.admits(bd[i], N)) continue;
                    auto K = ide.homogeneous_ideal(bd[i], N);
                    auto k = r.index_of(K);
                    t.check(bd.delta_n(d, i) == r.delta_n(dp, k), [&] { return make_witness(r, &dp, {bd[i], K}); });
                }
            });
        }
    }
}

}  // namespace dni::construction_claims
