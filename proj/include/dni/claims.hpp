#pragma once

/**
 * @file claims.hpp
 * @brief The claim registry: each entry is an executable check over a corpus.
 *
 * A claim walks the instance slots it declares (ring, expansion, ideals,
 * elements), evaluates its hypothesis, and only then its conclusion. Instances
 * whose hypothesis fails are counted separately so vacuous truth stays visible.
 *
 * Claims with default_run == false are left out of a plain run: self-tests of
 * the witness machinery, and literal readings of statements that are known to
 * need an extra hypothesis.
 */

#include <functional>
#include <string>
#include <vector>

#include "dni/claims_constructions.hpp"
#include "dni/instance.hpp"

namespace dni {

struct Claim {
    std::string id;
    std::string description;
    std::string statement;
    std::string shape;
    bool default_run = true;
    std::function<void(const Context&, Tally&)> run;
};

namespace claims {

template <class F>
void each_expansion(const Context& c, F&& f) {
    for (const auto& r : c.rings)
        for (std::size_t e = 0; e < r->expansions.size(); ++e) f(*r, e, r->expansions[e].d);
}

inline bool spectrum_nonempty(const RingData& r, const Expansion& d) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r.delta_n(d, i)) return true;
    return false;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= n; ++p) {
        bool prime = true;
        for (std::int64_t q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
        if (prime) out.push_back(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Basic properties

inline void subset_nilradical(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            t.implication(r.value_proper(d, i) && r.delta_n(d, i), r.subset(i, r.nil_index()),
                          [&] { return make_witness(r, &d, {r[i]}); });
        });
    });
}

inline void n_ideal_implies_delta_n(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            t.implication(r.n_ideal(i), r.delta_n(d, i), [&] { return make_witness(r, &d, {r[i]}); });
        });
    });
}

inline void delta0_is_n(const Context& c, Tally& t) {
    for (const auto& rp : c.rings) {
        const auto& r = *rp;
        auto d0 = make_expansion(r.ring(), ExpansionRecipe::d0(), r.lattice_ptr());
        each_proper_index(r, [&](std::size_t i) {
            t.check(r.delta_n(d0, i) == r.n_ideal(i), [&] { return make_witness(r, &d0, {r[i]}); });
        });
    }
}

inline void primary_to_n(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            t.implication(r.subset(i, r.nil_index()) && r.delta_primary(d, i), r.delta_n(d, i), [&] {
                return make_witness(r, &d, {r[i]}, delta_n_failure(r, r[i], d.apply(r[i])));
            });
        });
    });
}

inline void nilradical_primary_iff_n(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        auto k = r.nil_index();
        t.check(r.delta_primary(d, k) == r.delta_n(d, k), [&] { return make_witness(r, &d, {r.nil()}); });
    });
}

inline void primary_n_iff_subset(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            t.implication(r.delta_primary(d, i) && r.value_proper(d, i), r.delta_n(d, i) == r.subset(i, r.nil_index()),
                          [&] { return make_witness(r, &d, {r[i]}); });
        });
    });
}

inline void prime_iff_nilradical(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            t.implication(r.ideal_class(i).is_prime && r.value_proper(d, i), r.delta_n(d, i) == (i == r.nil_index()),
                          [&] { return make_witness(r, &d, {r[i]}); });
        });
    });
}

inline void four_equivalents(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            bool v[4];
            for (int m = 0; m < 4; ++m) v[m] = is_delta_n_ideal(r[i], d, kAllMethods[m]);
            bool agree = v[0] == v[1] && v[1] == v[2] && v[2] == v[3];
            t.check(agree, [&] {
                std::string note;
                for (int m = 0; m < 4; ++m) note += std::string(m ? ", " : "") + method_name(kAllMethods[m]) + "=" + (v[m] ? "true" : "false");
                return make_witness(r, &d, {r[i]}, {}, note);
            });
        });
    });
}

// ---------------------------------------------------------------------------
// Rings in which every ideal is a delta-n-ideal

struct EveryIdealConditions {
    bool principal = true, all = true, unique_prime = false, quasi_local_nil = false;

    bool agree() const { return principal == all && all == unique_prime && unique_prime == quasi_local_nil; }
    std::string text() const {
        auto b = [](bool x) { return x ? "true" : "false"; };
        return std::string("principal=") + b(principal) + ", all=" + b(all) + ", unique_prime=" + b(unique_prime) +
               ", quasi_local_nil=" + b(quasi_local_nil);
    }
};

inline EveryIdealConditions every_ideal_conditions(const RingData& r, const Expansion& d) {
    EveryIdealConditions c;
    const Ring& R = r.ring();
    for (Index a = 0; a < R.n(); ++a) {
        auto k = r.lattice().find(detail::principal_set(R, a));
        if (r.proper(*k) && !r.delta_n(d, *k)) c.principal = false;
    }
    std::size_t primes = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r.proper(i) && !r.delta_n(d, i)) c.all = false;
        if (r.proper(i) && r.ideal_class(i).is_prime) ++primes;
    }
    c.unique_prime = primes == 1 && r.ideal_class(r.nil_index()).is_prime;
    const auto& rc = r.ring_class();
    c.quasi_local_nil = rc.is_quasi_local && rc.maximal_ideal && *rc.maximal_ideal == r.nil();
    return c;
}

/// delta(P) != R for every prime P: the step from "every ideal" to "sqrt(0) is the only prime" needs it.
inline bool primes_keep_proper_values(const RingData& r, const Expansion& d) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r.proper(i) && r.ideal_class(i).is_prime && !r.value_proper(d, i)) return false;
    return true;
}

inline void every_ideal_quasilocal(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        auto cond = every_ideal_conditions(r, d);
        t.implication(primes_keep_proper_values(r, d), cond.agree(), [&] { return make_witness(r, &d, {}, {}, cond.text()); });
    });
}

inline void every_ideal_ungated(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        auto cond = every_ideal_conditions(r, d);
        t.check(cond.agree(), [&] { return make_witness(r, &d, {}, {}, cond.text()); });
    });
}

// ---------------------------------------------------------------------------
// Domains, fields, von Neumann regular rings

inline void domain_zero_only(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        if (!r.ring_class().is_integral_domain) return;
        bool hyp = true, concl = true;
        each_proper_index(r, [&](std::size_t i) {
            hyp = hyp && r.value_proper(d, i);
            concl = concl && (r.delta_n(d, i) == (i == r.lattice().zero_index()));
        });
        t.implication(hyp, concl, [&] { return make_witness(r, &d, {}); });
    });
    // ZZ, bounded: generators 0 <= n <= 1000.
    auto ZZ = make_integer_ring();
    std::vector<ExpansionRecipe> recipes = {ExpansionRecipe::d0(), ExpansionRecipe::d1(), ExpansionRecipe::full()};
    for (std::int64_t q : {2, 3, 6}) recipes.push_back(ExpansionRecipe::plus({ElemExpr::integer(q)}));
    for (std::int64_t m : {2, 3}) recipes.push_back(ExpansionRecipe::star({ElemExpr::integer(m)}));
    for (const auto& recipe : recipes) {
        auto d = make_expansion(ZZ, recipe);
        bool hyp = true, concl = true;
        std::int64_t bad = -1;
        for (std::int64_t n = 0; n <= 1000; ++n) {
            if (n == 1) continue;
            if (d.apply_integer(n) == 1) hyp = false;
            if (is_delta_n_ideal(Ideal::integer_multiples(ZZ, n), d) != (n == 0) && bad < 0) {
                concl = false;
                bad = n;
            }
        }
        t.implication(hyp, concl, [&] {
            return Witness{"ZZ", d.to_string(), {"(" + std::to_string(bad) + ")"}, {}, "bounded scan n <= 1000"};
        });
    }
}

inline void von_neumann_field(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t e, const Expansion& d) {
        const auto& rc = r.ring_class();
        bool right = rc.is_von_neumann_regular && r.delta_n(d, r.lattice().zero_index());
        t.implication(r.expansions[e].profile.zero_fixed, rc.is_field == right, [&] {
            return make_witness(r, &d, {zero_ideal(r.ring())}, {}, std::string("field=") + (rc.is_field ? "true" : "false"));
        });
    });
}

// ---------------------------------------------------------------------------
// Colon ideals, maximal members, existence

/// (delta(I):x) inside delta(I:x) and delta(I:x) != R.
inline bool colon_inclusion(const RingData& r, const Expansion& d, std::size_t i, Index x) {
    auto dI = d.apply_index(i);
    auto k = r.colon(i, x);
    auto dk = d.apply_index(k);
    return r.proper(dk) && r.subset(r.colon(dI, x), dk);
}

inline void colon_stability(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            const auto& dI = r[d.apply_index(i)];
            for (Index x = 0; x < r.ring().n(); ++x) {
                if (dI.contains(x)) continue;
                bool hyp = r.delta_n(d, i) && colon_inclusion(r, d, i, x);
                t.implication(hyp, r.delta_n(d, r.colon(i, x)), [&] {
                    return make_witness(r, &d, {r[i], r[r.colon(i, x)]}, {element_text(r.ring(), "x", x)});
                });
            }
        });
    });
}

inline void colon_stability_quasi(const Context& c, Tally& t) {
    for (const auto& rp : c.rings) {
        const auto& r = *rp;
        auto d1 = make_expansion(r.ring(), ExpansionRecipe::d1(), r.lattice_ptr());
        each_proper_index(r, [&](std::size_t i) {
            const auto& rad = r[r.rad(i)];
            for (Index x = 0; x < r.ring().n(); ++x) {
                if (rad.contains(x)) continue;
                t.implication(r.delta_n(d1, i), r.delta_n(d1, r.colon(i, x)), [&] {
                    return make_witness(r, &d1, {r[i], r[r.colon(i, x)]}, {element_text(r.ring(), "x", x)});
                });
            }
        });
    }
}

inline std::vector<std::size_t> maximal_members(const RingData& r, const Expansion& d) {
    std::vector<std::size_t> in, out;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r.delta_n(d, i)) in.push_back(i);
    for (auto i : in) {
        bool maximal = true;
        for (auto j : in)
            if (j != i && r.subset(i, j)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

inline void maximal_is_nilradical(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        for (auto i : maximal_members(r, d)) {
            bool hyp = !colon_condition_violation(d, r[i]).has_value();
            bool concl = i == r.nil_index() && r.ideal_class(i).is_prime;
            t.implication(hyp, concl, [&] { return make_witness(r, &d, {r[i]}); });
        }
    });
}

inline void maximal_quasi_is_nilradical(const Context& c, Tally& t) {
    for (const auto& rp : c.rings) {
        const auto& r = *rp;
        auto d1 = make_expansion(r.ring(), ExpansionRecipe::d1(), r.lattice_ptr());
        for (auto i : maximal_members(r, d1))
            t.check(i == r.nil_index() && r.ideal_class(i).is_prime, [&] { return make_witness(r, &d1, {r[i]}); });
    }
}

inline void existence_equivalence(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t e, const Expansion& d) {
        bool exists = spectrum_nonempty(r, d);
        bool prime = r.ideal_class(r.nil_index()).is_prime;
        bool primary = r.delta_primary(d, r.nil_index());
        t.implication(r.expansions[e].profile.colon_condition, exists == prime && prime == primary, [&] {
            auto b = [](bool x) { return x ? "true" : "false"; };
            return make_witness(r, &d, {}, {},
                                std::string("exists=") + b(exists) + ", nil_prime=" + b(prime) + ", nil_primary=" + b(primary));
        });
    });
}

// ---------------------------------------------------------------------------
// Expansions with delta(delta(I)) = delta(I)

inline bool fixed_value(const Expansion& d, std::size_t i) { return d.apply_index(d.apply_index(i)) == d.apply_index(i); }

inline void idempotent_colon(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            for (Index a = 0; a < r.ring().n(); ++a) {
                if (r.nil().contains(a)) continue;
                t.implication(fixed_value(d, i) && r.delta_n(d, i), d.apply_index(r.colon(i, a)) == d.apply_index(i),
                              [&] { return make_witness(r, &d, {r[i]}, {element_text(r.ring(), "a", a)}); });
            }
        });
    });
}

inline void idempotent_n_iff(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            auto k = d.apply_index(i);
            t.implication(fixed_value(d, i) && r.proper(k), r.n_ideal(k) == r.delta_n(d, k),
                          [&] { return make_witness(r, &d, {r[i], r[k]}); });
        });
    });
}

inline void idempotent_cancel(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            each_proper_index(r, [&](std::size_t j) {
                bool base = fixed_value(d, i) && fixed_value(d, j) && r.delta_n(d, i) && r.delta_n(d, j);
                for (std::size_t k = 0; k < r.size(); ++k) {
                    bool hyp = base && r.product(i, k) == r.product(j, k) && !r.subset(k, r.nil_index());
                    t.implication(hyp, d.apply_index(i) == d.apply_index(j), [&] { return make_witness(r, &d, {r[i], r[j], r[k]}); });
                }
            });
        });
    });
}

inline void idempotent_product(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            for (std::size_t k = 0; k < r.size(); ++k) {
                auto ik = r.product(i, k);
                bool hyp = fixed_value(d, ik) && r.delta_n(d, ik) && r.delta_n(d, i) && !r.subset(k, r.nil_index());
                t.implication(hyp, d.apply_index(ik) == d.apply_index(i), [&] { return make_witness(r, &d, {r[i], r[k]}); });
            }
        });
    });
}

// ---------------------------------------------------------------------------
// Zero divisors of R/sqrt(0)

inline void zero_divisor_criterion(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t e, const Expansion& d) {
        auto& qd = c.quotient(r, r.nil_index());
        const auto& dq = c.derived(qd, r, e);
        const Ring& Q = qd.q.ring;
        auto dq0 = dq.apply(zero_ideal(Q));
        bool all = true;
        Index witness = 0;
        for (Index z = 0; z < Q.n() && all; ++z) {
            bool zd = false;
            for (Index w = 0; w < Q.n() && !zd; ++w) zd = w != Q.zero_index() && Q.mul(z, w) == Q.zero_index();
            if (zd && !dq0.contains(z)) {
                all = false;
                witness = z;
            }
        }
        bool left = r.delta_n(d, r.nil_index());
        t.check(left == all, [&] {
            return make_witness(r, &d, {r.nil()}, all ? std::vector<std::string>{} : std::vector<std::string>{element_text(Q, "z", witness)},
                                std::string("nil_delta_n=") + (left ? "true" : "false"));
        });
    });
}

// ---------------------------------------------------------------------------
// Comparing expansions

inline void comparison_value_n_ideal(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            auto k = d.apply_index(i);
            t.implication(r.n_ideal(k), r.delta_n(d, i), [&] { return make_witness(r, &d, {r[i], r[k]}); });
        });
    });
}

inline void comparison_radical_converse(const Context& c, Tally& t) {
    for (const auto& rp : c.rings) {
        const auto& r = *rp;
        auto d1 = make_expansion(r.ring(), ExpansionRecipe::d1(), r.lattice_ptr());
        each_proper_index(r, [&](std::size_t i) {
            t.implication(r.delta_n(d1, i), r.n_ideal(r.rad(i)), [&] { return make_witness(r, &d1, {r[i]}); });
        });
    }
}

inline bool pointwise_below(const RingData& r, const Expansion& d, const Expansion& g) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!r.subset(d.apply_index(i), g.apply_index(i))) return false;
    return true;
}

inline void comparison_larger(const Context& c, Tally& t) {
    for (const auto& rp : c.rings) {
        const auto& r = *rp;
        for (const auto& de : r.expansions)
            for (const auto& ge : r.expansions) {
                bool below = pointwise_below(r, de.d, ge.d);
                each_proper_index(r, [&](std::size_t i) {
                    t.implication(below && r.delta_n(de.d, i), r.delta_n(ge.d, i), [&] {
                        return make_witness(r, &de.d, {r[i]}, {}, "larger expansion " + ge.d.to_string());
                    });
                });
            }
    }
}

inline void comparison_composite(const Context& c, Tally& t) {
    for (const auto& rp : c.rings) {
        const auto& r = *rp;
        for (const auto& de : r.expansions)
            for (const auto& ge : r.expansions) {
                auto comp = compose_expansions(de.d, ge.d);
                each_proper_index(r, [&](std::size_t i) {
                    auto gi = ge.d.apply_index(i);
                    t.implication(r.delta_n(de.d, gi), r.delta_n(comp, i), [&] { return make_witness(r, &comp, {r[i]}); });
                });
            }
    }
}

// ---------------------------------------------------------------------------
// Radicals, sandwiches, intersections, sums

inline void radical_transfer(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            bool commutes = r.rad(d.apply_index(i)) == d.apply_index(r.rad(i));
            t.implication(commutes && r.delta_n(d, i), r.delta_n(d, r.rad(i)), [&] { return make_witness(r, &d, {r[i]}); });
        });
    });
}

inline void radical_transfer_quasi(const Context& c, Tally& t) {
    for (const auto& rp : c.rings) {
        const auto& r = *rp;
        auto d1 = make_expansion(r.ring(), ExpansionRecipe::d1(), r.lattice_ptr());
        each_proper_index(r, [&](std::size_t i) {
            t.check(r.delta_n(d1, i) == r.n_ideal(r.rad(i)), [&] { return make_witness(r, &d1, {r[i]}); });
        });
    }
}

inline void sandwich(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            bool top = r.delta_n(d, i);
            for (std::size_t j = 0; j < r.size(); ++j) {
                if (!r.subset(j, i)) continue;
                for (std::size_t k = 0; k < r.size(); ++k) {
                    if (!r.subset(j, k) || !r.subset(k, i)) continue;
                    t.implication(top && d.apply_index(j) == d.apply_index(i), r.delta_n(d, k),
                                  [&] { return make_witness(r, &d, {r[j], r[k], r[i]}); });
                }
            }
        });
    });
}

inline void intersection_closed(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t e, const Expansion& d) {
        bool preserving = r.expansions[e].profile.intersection_preserving;
        each_proper_index(r, [&](std::size_t i) {
            for (std::size_t j = i; j < r.size(); ++j) {
                if (!r.proper(j)) continue;
                t.implication(preserving && r.delta_n(d, i) && r.delta_n(d, j), r.delta_n(d, r.meet(i, j)),
                              [&] { return make_witness(r, &d, {r[i], r[j]}); });
            }
        });
    });
}

inline void intersection_noncomparable(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t e, const Expansion& d) {
        bool preserving = r.expansions[e].profile.intersection_preserving;
        each_proper_index(r, [&](std::size_t i) {
            for (std::size_t j = i + 1; j < r.size(); ++j) {
                if (!r.proper(j)) continue;
                auto di = d.apply_index(i), dj = d.apply_index(j);
                bool primes = r.proper(di) && r.proper(dj) && r.ideal_class(di).is_prime && r.ideal_class(dj).is_prime;
                bool noncomparable = !r.subset(di, dj) && !r.subset(dj, di);
                bool hyp = preserving && primes && noncomparable && r.delta_n(d, r.meet(i, j));
                t.implication(hyp, r.delta_n(d, i) && r.delta_n(d, j), [&] { return make_witness(r, &d, {r[i], r[j]}); });
            }
        });
    });
}

inline void superfluous(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            t.implication(r.delta_n(d, i) && r.value_proper(d, i), r.ideal_class(i).is_superfluous,
                          [&] { return make_witness(r, &d, {r[i]}); });
        });
    });
}

inline void sum_closed(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            for (std::size_t j = i; j < r.size(); ++j) {
                if (!r.proper(j)) continue;
                bool hyp = r.delta_n(d, i) && r.delta_n(d, j) && r.value_proper(d, i) && r.value_proper(d, j);
                t.implication(hyp, r.delta_n(d, r.sum(i, j)), [&] { return make_witness(r, &d, {r[i], r[j]}); });
            }
        });
    });
}

inline void finite_delta_n_is_n(const Context& c, Tally& t) {
    each_expansion(c, [&](const RingData& r, std::size_t, const Expansion& d) {
        each_proper_index(r, [&](std::size_t i) {
            t.implication(r.value_proper(d, i) && r.delta_n(d, i), r.n_ideal(i), [&] {
                return make_witness(r, &d, {r[i]}, delta_n_failure(r, r[i], r[i]), "delta-n but not an n-ideal");
            });
        });
    });
}

// ---------------------------------------------------------------------------
// Worked examples

inline void example_z6(const Context&, Tally& t) {
    auto R = make_modular_ring(6);
    auto zero = zero_ideal(R);
    RingData data(R);
    for (auto recipe : {ExpansionRecipe::d0(), ExpansionRecipe::d1()}) {
        auto d = make_expansion(R, recipe, data.lattice_ptr());
        auto v = check_delta_n_ideal(zero, d);
        bool ok = !v.holds && v.elements.size() == 2 && R.format(v.elements[0]) == "2" && R.format(v.elements[1]) == "3";
        t.check(ok, [&] {
            std::vector<std::string> els;
            for (std::size_t k = 0; k < v.elements.size(); ++k) els.push_back(std::string(k ? "b=" : "a=") + R.format(v.elements[k]));
            return make_witness(data, &d, {zero}, els, v.holds ? "zero ideal reported as delta-n" : "unexpected witness");
        });
    }
}

inline void example_zz_delta_plus(const Context&, Tally& t) {
    auto ZZ = make_integer_ring();
    auto d0 = make_expansion(ZZ, ExpansionRecipe::d0());
    auto d1 = make_expansion(ZZ, ExpansionRecipe::d1());
    auto ps = primes_up_to(100);
    for (auto p : ps)
        for (auto q : ps) {
            if (p == q) continue;
            auto I = Ideal::integer_multiples(ZZ, p);
            auto dp = make_expansion(ZZ, ExpansionRecipe::plus({ElemExpr::integer(q)}));
            bool ok = is_delta_n_ideal(I, dp) && !is_delta_n_ideal(I, d0) && !is_delta_n_ideal(I, d1) && !is_n_ideal(I);
            t.check(ok, [&] { return Witness{"ZZ", dp.to_string(), {I.to_string()}, {}, ""}; });
        }
}

inline void example_e3_audit(const Context&, Tally& t) {
    auto spec = RingSpec::poly_quotient_ring(RingSpec::modular_ring(4), {0, 0, 0, 1});
    auto R = construct_ring(spec);
    RingData data(R);
    auto u = R.bind(ElemExpr::polynomial({1, 1}));
    auto v = R.bind(ElemExpr::polynomial({1, 3, 1}));
    auto J = ideal_from_generators(R, {u});
    auto nilgen = ideal_from_exprs(R, {ElemExpr::integer(2), ElemExpr::polynomial({0, 1})});
    auto w = [&](std::string note) { return make_witness(data, nullptr, {J}, {}, std::move(note)); };
    t.check(R.mul(u, v) == R.one(), [&] { return w("(1+x)(1+3x+x^2) != 1"); });
    t.check(!J.is_proper(), [&] { return w("(x+1) is proper"); });
    t.check(data.nil() == nilgen, [&] { return w("sqrt(0) != (2,x)"); });

    auto d = make_expansion(R, ExpansionRecipe::plus(nilgen.generator_exprs()), data.lattice_ptr());
    std::size_t separating = 0;
    each_proper_index(data, [&](std::size_t i) { separating += data.delta_n(d, i) && !data.n_ideal(i); });
    t.note("computed: (1+x)(1+3x+x^2) = 1 in " + data.name() + ", so (x+1) is the unit ideal");
    t.note("the worked example takes J = (x+1) to be a proper ideal; the computation contradicts that premise");
    t.note("proper ideals that are " + d.to_string() + "-n-ideals but not n-ideals in " + data.name() + ": " +
           std::to_string(separating));
}

inline void selftest_z6_n_ideals(const Context&, Tally& t) {
    auto R = make_modular_ring(6);
    RingData data(R);
    each_proper_index(data, [&](std::size_t i) {
        auto v = check_n_ideal(data[i]);
        t.check(v.holds, [&] {
            std::vector<std::string> els;
            for (std::size_t k = 0; k < v.elements.size(); ++k) els.push_back(std::string(k ? "b=" : "a=") + R.format(v.elements[k]));
            return make_witness(data, nullptr, {data[i]}, els);
        });
    });
}

}  // namespace claims

inline const std::vector<Claim>& claim_registry() {
    using namespace claims;
    static const std::vector<Claim> registry = {
        {"prop-subset-nilradical", "delta-n-ideals with proper expansion lie in the nilradical",
         "I proper, delta(I) != R, I delta-n  =>  I subset sqrt(0)", "ring x expansion x ideal", true, subset_nilradical},
        {"n-ideal-implies-delta-n", "every n-ideal is a delta-n-ideal", "I n-ideal  =>  I delta-n for every delta",
         "ring x expansion x ideal", true, n_ideal_implies_delta_n},
        {"delta0-n-iff-n-ideal", "delta0-n-ideals are exactly the n-ideals", "I delta0-n  <=>  I n-ideal", "ring x ideal", true,
         delta0_is_n},
        {"prop-primary-to-n", "delta-primary ideals inside the nilradical are delta-n-ideals",
         "I subset sqrt(0), I delta-primary  =>  I delta-n", "ring x expansion x ideal", true, primary_to_n},
        {"prop-nilradical-primary-iff-n", "the nilradical is delta-primary iff it is a delta-n-ideal",
         "sqrt(0) delta-primary  <=>  sqrt(0) delta-n", "ring x expansion", true, nilradical_primary_iff_n},
        {"prop-primary-n-iff-subset", "a delta-primary ideal with proper expansion is delta-n iff it lies in the nilradical",
         "I delta-primary, delta(I) != R  =>  (I delta-n <=> I subset sqrt(0))", "ring x expansion x ideal", true,
         primary_n_iff_subset},
        {"prop-prime-iff-nilradical", "a prime ideal with proper expansion is delta-n iff it is the nilradical",
         "I prime, delta(I) != R  =>  (I delta-n <=> I = sqrt(0))", "ring x expansion x ideal", true, prime_iff_nilradical},
        {"thm-four-equivalents", "the four characterizations of delta-n-ideals agree",
         "definition <=> (I:a) subset sqrt(0) for a outside delta(I) <=> element-ideal form <=> ideal-pair form",
         "ring x expansion x ideal", true, four_equivalents},
        {"thm-every-ideal-quasilocal", "every ideal delta-n iff sqrt(0) is the only prime iff quasi-local with maximal ideal sqrt(0)",
         "delta(P) != R for all primes P  =>  (every proper principal ideal delta-n <=> every proper ideal delta-n <=> "
         "sqrt(0) unique prime <=> R quasi-local with M = sqrt(0))",
         "ring x expansion", true, every_ideal_quasilocal},
        {"thm-every-ideal-ungated", "the every-ideal equivalence without the prime-value hypothesis",
         "every proper principal ideal delta-n <=> every proper ideal delta-n <=> sqrt(0) unique prime <=> "
         "R quasi-local with M = sqrt(0)",
         "ring x expansion", false, every_ideal_ungated},
        {"prop-domain-zero-only", "in a domain with proper expansion values only {0} is delta-n",
         "R domain, delta(I) != R for proper I  =>  {delta-n-ideals} = {0}; over ZZ for 0 <= n <= 1000",
         "ring x expansion", true, domain_zero_only},
        {"thm-von-neumann-field", "field iff von Neumann regular with {0} delta-n, when delta fixes 0",
         "delta(0) = 0  =>  (R field <=> R von Neumann regular and {0} delta-n)", "ring x expansion", true, von_neumann_field},
        {"lemma-colon-stability", "colon ideals of delta-n-ideals stay delta-n under the colon inclusion",
         "I delta-n, x not in delta(I), (delta(I):x) subset delta(I:x) != R  =>  (I:x) delta-n",
         "ring x expansion x ideal x element", true, colon_stability},
        {"lemma-colon-stability-quasi", "colon ideals of quasi n-ideals are quasi n-ideals",
         "I quasi n-ideal, x not in sqrt(I)  =>  (I:x) quasi n-ideal", "ring x ideal x element", true, colon_stability_quasi},
        {"prop-maximal-is-nilradical", "a maximal delta-n-ideal satisfying the colon condition is the prime nilradical",
         "I maximal delta-n, colon condition at I  =>  I = sqrt(0) and I prime", "ring x expansion x ideal", true,
         maximal_is_nilradical},
        {"prop-maximal-quasi-is-nilradical", "a maximal quasi n-ideal is the prime nilradical",
         "I maximal quasi n-ideal  =>  I = sqrt(0) and I prime", "ring x ideal", true, maximal_quasi_is_nilradical},
        {"thm-existence-equivalence", "a delta-n-ideal exists iff sqrt(0) is prime iff sqrt(0) is delta-primary",
         "colon condition for delta  =>  (some delta-n-ideal exists <=> sqrt(0) prime <=> sqrt(0) delta-primary)",
         "ring x expansion", true, existence_equivalence},
        {"prop-idempotent-colon", "colon by a non-nilpotent keeps the expansion of a delta-n-ideal",
         "delta(delta(I)) = delta(I), I delta-n, a not in sqrt(0)  =>  delta(I:a) = delta(I)",
         "ring x expansion x ideal x element", true, idempotent_colon},
        {"prop-idempotent-n-iff", "an expansion value is an n-ideal iff it is delta-n",
         "delta(delta(I)) = delta(I), delta(I) != R  =>  (delta(I) n-ideal <=> delta(I) delta-n)", "ring x expansion x ideal",
         true, idempotent_n_iff},
        {"prop-idempotent-cancel", "IK = JK with K not nil forces equal expansions",
         "delta fixes delta(I) and delta(J), I and J delta-n, IK = JK, K not inside sqrt(0)  =>  delta(I) = delta(J)",
         "ring x expansion x ideal x ideal x ideal", true, idempotent_cancel},
        {"prop-idempotent-product", "IK and I delta-n with K not nil give equal expansions",
         "delta(delta(IK)) = delta(IK), IK and I delta-n, K not inside sqrt(0)  =>  delta(IK) = delta(I)",
         "ring x expansion x ideal x ideal", true, idempotent_product},
        {"prop-zero-divisor-criterion", "sqrt(0) is delta-n iff every zero divisor of R/sqrt(0) is delta_q-nilpotent",
         "sqrt(0) delta-n  <=>  Z(R/sqrt(0)) subset delta_q(0)", "ring x expansion", true, zero_divisor_criterion},
        {"prop-expansion-comparisons-1", "an ideal whose expansion is an n-ideal is delta-n",
         "delta(I) n-ideal  =>  I delta-n", "ring x expansion x ideal", true, comparison_value_n_ideal},
        {"prop-expansion-comparisons-1-radical", "a quasi n-ideal has an n-ideal radical", "I quasi n-ideal  =>  sqrt(I) n-ideal",
         "ring x ideal", true, comparison_radical_converse},
        {"prop-expansion-comparisons-2", "delta-n-ideals are gamma-n-ideals for every larger gamma",
         "delta <= gamma pointwise, I delta-n  =>  I gamma-n", "ring x expansion x expansion x ideal", true, comparison_larger},
        {"prop-expansion-comparisons-3", "gamma(I) delta-n makes I a (delta o gamma)-n-ideal",
         "gamma(I) delta-n  =>  I (delta o gamma)-n", "ring x expansion x expansion x ideal", true, comparison_composite},
        {"prop-radical-transfer", "the radical of a delta-n-ideal is delta-n when delta commutes with radicals at I",
         "sqrt(delta(I)) = delta(sqrt(I)), I delta-n  =>  sqrt(I) delta-n", "ring x expansion x ideal", true, radical_transfer},
        {"prop-radical-transfer-quasi", "I is a quasi n-ideal iff sqrt(I) is an n-ideal", "I quasi n-ideal  <=>  sqrt(I) n-ideal",
         "ring x ideal", true, radical_transfer_quasi},
        {"prop-sandwich", "ideals between J and a delta-n-ideal I with delta(J) = delta(I) are delta-n",
         "J subset K subset I, I delta-n, delta(J) = delta(I)  =>  K delta-n", "ring x expansion x ideal^3", true, sandwich},
        {"prop-int-intersection", "intersection-preserving expansions: intersections of delta-n-ideals are delta-n",
         "delta preserves intersections, I and J delta-n  =>  I cap J delta-n", "ring x expansion x ideal x ideal", true,
         intersection_closed},
        {"prop-int-noncomparable", "intersection-preserving expansions: a delta-n intersection with non-comparable prime values splits",
         "delta preserves intersections, delta(I), delta(J) non-comparable primes, I cap J delta-n  =>  I and J delta-n",
         "ring x expansion x ideal x ideal", true, intersection_noncomparable},
        {"lemma-superfluous", "delta-n-ideals with proper expansion are superfluous", "I delta-n, delta(I) != R  =>  I superfluous",
         "ring x expansion x ideal", true, superfluous},
        {"prop-sum", "sums of delta-n-ideals with proper expansions are delta-n",
         "I, J delta-n, delta(I) != R, delta(J) != R  =>  I + J delta-n", "ring x expansion x ideal x ideal", true, sum_closed},
        {"hom-radical-compatible", "every ring homomorphism is compatible with radicals",
         "f ring homomorphism  =>  sqrt(f^-1(J)) = f^-1(sqrt(J)) for every ideal J", "homomorphism", true,
         construction_claims::radical_compatible},
        {"hom-epi-image", "surjective compatible homomorphisms carry delta(I) onto gamma(f(I))",
         "f delta-gamma epimorphism, ker f subset I  =>  gamma(f(I)) = f(delta(I))", "homomorphism x expansion x expansion x ideal",
         true, construction_claims::epi_image},
        {"prop-hom-transfer-mono", "preimages of gamma-n-ideals under compatible monomorphisms are delta-n",
         "f injective delta-gamma homomorphism, J gamma-n  =>  f^-1(J) delta-n", "homomorphism x expansion x expansion x ideal",
         true, construction_claims::hom_transfer_mono},
        {"prop-hom-transfer-epi", "images of delta-n-ideals containing the kernel under compatible epimorphisms are gamma-n",
         "f surjective delta-gamma homomorphism, ker f subset I, I delta-n  =>  f(I) gamma-n",
         "homomorphism x expansion x expansion x ideal", true, construction_claims::hom_transfer_epi},
        {"cor-quotient-transfer", "delta-n-ideals pass to quotients", "J subset I, I delta-n  =>  I/J delta_q-n in R/J",
         "ring x expansion x ideal x ideal", true, construction_claims::quotient_transfer},
        {"cor-quotient-lift-nil", "delta_q-n-ideals lift along nilpotent kernels",
         "J subset I, J subset sqrt(0), I/J delta_q-n  =>  I delta-n", "ring x expansion x ideal x ideal", true,
         construction_claims::quotient_lift_nil},
        {"cor-quotient-lift-dn", "delta_q-n-ideals lift along delta-n kernels with proper expansion",
         "J subset I, J delta-n, delta(J) != R, I/J delta_q-n  =>  I delta-n", "ring x expansion x ideal x ideal", true,
         construction_claims::quotient_lift_dn},
        {"prop-localization-transfer", "delta-n-ideals missing S localize to delta_S-n-ideals",
         "I delta-n, I cap S empty  =>  S^-1 I delta_S-n", "ring x multiplicative set x expansion x ideal", true,
         construction_claims::localization_transfer},
        {"prop-localization-lift", "delta_S-n-ideals lift when S avoids zero divisors and Z_delta(I)",
         "S cap Z(R) empty, S cap Z_delta(I)(R) empty, S^-1 I delta_S-n  =>  I delta-n",
         "ring x multiplicative set x expansion x ideal", true, construction_claims::localization_lift},
        {"prop-regular-contraction", "contractions from the localization at regular elements are delta-n",
         "K delta_r(R)-n in R_r(R)  =>  K^c delta-n", "ring x expansion x ideal", true,
         construction_claims::regular_contraction},
        {"rem-product-obstruction", "a product ideal with proper product expansion is never delta_x-n",
         "I proper ideal of R1 x R2, delta_x(I) != R  =>  I not delta_x-n", "product ring x expansion pair x ideal", true,
         construction_claims::product_obstruction},
        {"rem-product-obstruction-literal", "product rings have empty delta_x spectrum whenever some value is proper",
         "some delta_x(I) != R  =>  no delta_x-n-ideal", "product ring x expansion pair", false,
         construction_claims::product_obstruction_literal},
        {"prop-idealization-equivalence", "I is delta-n iff I(+)N is delta_(+)-n",
         "IM subset N  =>  (I delta-n <=> I(+)N delta_(+)-n)", "idealization x expansion x ideal x submodule", true,
         construction_claims::idealization_equivalence},
        {"conj-finite-delta-n-is-n", "on finite rings a delta-n-ideal with proper expansion is an n-ideal",
         "R finite, delta(I) != R, I delta-n  =>  I n-ideal", "ring x expansion x ideal", true, finite_delta_n_is_n},
        {"example-z6-counterexample", "in Z6 the zero ideal is neither delta0-n nor delta1-n, witness (2,3)",
         "{0} of Z6 fails for delta0 and delta1 with a=2, b=3", "fixed", true, example_z6},
        {"example-zz-delta-plus", "pZZ is a d+(qZZ)-n-ideal but not delta0-n, delta1-n or an n-ideal",
         "p != q primes <= 100  =>  pZZ d+((q))-n, not d0-n, not d1-n, not n-ideal", "prime pair", true, example_zz_delta_plus},
        {"example-e3-audit", "audit of the Z4[x]/(x^3) example: (x+1) is the unit ideal",
         "(1+x)(1+3x+x^2) = 1, (x+1) = R, sqrt(0) = (2,x) in Z4[x]/(x^3)", "fixed", true, example_e3_audit},
        {"selftest-z6-all-n-ideals", "self-test: every proper ideal of Z6 is an n-ideal (false)",
         "every proper ideal of Z6 is an n-ideal", "fixed", false, selftest_z6_n_ideals},
    };
    return registry;
}

inline const Claim& find_claim(const std::string& id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return c;
    throw AlgebraError(Errc::unknown_claim, "unknown claim id: " + id);
}

}  // namespace dni
