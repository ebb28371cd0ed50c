// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "dni/verifier.hpp"

using namespace dni;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

const Context& corpus_context() {
    static const Context ctx = build_context(builtin_corpus());
    return ctx;
}

std::vector<Expansion> catalog(const Ring& R, const std::shared_ptr<const IdealLattice>& L) {
    std::vector<Expansion> out;
    for (const auto& r : catalog_recipes(*L)) out.push_back(make_expansion(R, r, L));
    return out;
}

ClaimReport claim(const std::string& id, const Context& ctx = corpus_context()) { return run_claim(find_claim(id), ctx); }

std::string yes(bool b) { return b ? "true" : "false"; }

// 1. The four decision methods agree on every corpus instance, in under 60 s.
Outcome four_way() {
    auto t0 = std::chrono::steady_clock::now();
    auto ctx = build_context(builtin_corpus());
    std::size_t instances = 0, disagreements = 0;
    for (const auto& r : ctx.rings)
        for (const auto& e : r->expansions)
            for (const auto& I : r->lattice()) {
                if (!I.is_proper()) continue;
                ++instances;
                std::set<bool> v;
                for (auto m : kAllMethods) v.insert(is_delta_n_ideal(I, e.d, m));
                disagreements += v.size() != 1;
            }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu instances, %zu disagreements, %.2f s", instances, disagreements, secs);
    return {disagreements == 0 && instances > 0 && secs < 60.0, buf};
}

// 2. {0} of Z6 is neither delta0-n nor delta1-n, with witness (2, 3).
Outcome z6_counterexample() {
    auto R = make_modular_ring(6);
    Outcome o;
    for (auto recipe : {ExpansionRecipe::d0(), ExpansionRecipe::d1()}) {
        auto v = check_delta_n_ideal(zero_ideal(R), make_expansion(R, recipe));
        bool ok = !v.holds && v.elements.size() == 2 && R.format(v.elements[0]) == "2" && R.format(v.elements[1]) == "3";
        o.pass = o.pass && ok;
        o.detail += to_string(recipe) + ": " + (v.holds ? "delta-n" : "a=" + R.format(v.elements[0]) + ", b=" + R.format(v.elements[1])) + "; ";
    }
    return o;
}

// 3. pZZ is d+(qZZ)-n but neither delta0-n nor delta1-n, for primes p != q <= 100.
Outcome zz_delta_plus() {
    auto ZZ = make_integer_ring();
    auto d0 = make_expansion(ZZ, ExpansionRecipe::d0()), d1 = make_expansion(ZZ, ExpansionRecipe::d1());
    auto ps = claims::primes_up_to(100);
    std::size_t pairs = 0, bad = 0;
    for (auto p : ps)
        for (auto q : ps) {
            if (p == q) continue;
            ++pairs;
            auto I = Ideal::integer_multiples(ZZ, p);
            auto dp = make_expansion(ZZ, ExpansionRecipe::plus({ElemExpr::integer(q)}));
            bool ok = !is_delta_n_ideal(I, d0) && !is_delta_n_ideal(I, d1);
            for (auto m : kAllMethods) ok = ok && is_delta_n_ideal(I, dp, m);
            bad += !ok;
        }
    return {bad == 0 && pairs == 25 * 24, std::to_string(pairs) + " prime pairs, " + std::to_string(bad) + " failures"};
}

// 4. Every-ideal equivalence: named rings all-true / all-false, no mixed outcome anywhere.
Outcome every_ideal() {
    Outcome o;
    auto conditions = [](const RingData& r, const Expansion& d) { return claims::every_ideal_conditions(r, d); };
    auto all_true = [](const claims::EveryIdealConditions& c) { return c.principal && c.all && c.unique_prime && c.quasi_local_nil; };
    auto all_false = [](const claims::EveryIdealConditions& c) { return !c.principal && !c.all && !c.unique_prime && !c.quasi_local_nil; };
    std::size_t named_bad = 0;
    auto named = [&](const char* text, bool expect_true) {
        RingData r(construct_ring(parse_ring(text)));
        for (const auto& d : catalog(r.ring(), r.lattice_ptr())) {
            auto c = conditions(r, d);
            if (expect_true ? !all_true(c) : !all_false(c)) {
                if (named_bad++ < 3) o.detail += std::string(text) + " " + d.to_string() + " [" + c.text() + "]; ";
            }
        }
    };
    for (const char* t : {"Z4", "Z8", "Z9", "Z27", "Z32", "Z2[x]/(x^3)"}) named(t, true);
    for (const char* t : {"Z6", "Z10", "Z12", "Z2 x Z2"}) named(t, false);
    std::size_t mixed = 0, total = 0;
    for (const auto& r : corpus_context().rings)
        for (const auto& e : r->expansions) {
            ++total;
            mixed += !conditions(*r, e.d).agree();
        }
    o.pass = named_bad == 0 && mixed == 0;
    o.detail = "named-ring mismatches " + std::to_string(named_bad) + ", mixed outcomes " + std::to_string(mixed) + " of " +
               std::to_string(total) + (o.detail.empty() ? "" : "; e.g. " + o.detail);
    return o;
}

// 5. Existence equivalence under the colon condition, plus the Z12 and Z8 spectra.
Outcome existence() {
    auto rep = claim("thm-existence-equivalence");
    auto z12 = make_modular_ring(12);
    bool z12_empty = delta_n_spectrum(make_expansion(z12, ExpansionRecipe::d0())).all.empty();
    auto z8 = make_modular_ring(8);
    auto s8 = delta_n_spectrum(make_expansion(z8, ExpansionRecipe::d0()));
    std::vector<std::string> members;
    for (const auto& I : s8.all) members.push_back(I.to_string());
    bool z8_ok = members == std::vector<std::string>{"(0)", "(4)", "(2)"} && s8.maximal_members.size() == 1 &&
                 s8.maximal_members[0] == nilradical(z8) && s8.maximal_members[0].to_string() == "(2)";
    std::string list;
    for (const auto& m : members) list += (list.empty() ? "" : ", ") + m;
    return {rep.failed == 0 && rep.holds > 0 && z12_empty && z8_ok,
            "claim failures " + std::to_string(rep.failed) + " (holds " + std::to_string(rep.holds) + ", hypothesis not met " +
                std::to_string(rep.hypothesis_not_met) + "); Z12 d0 spectrum empty " + yes(z12_empty) + "; Z8 d0 spectrum {" + list + "}"};
}

// 6. Product obstruction: every catalog pair with a proper value has an empty spectrum.
Outcome product_obstruction() {
    std::size_t pairs = 0, nonempty = 0, per_ideal_failures = 0;
    std::string example;
    for (const char* text : {"Z4 x Z9", "Z2 x Z2", "Z2 x Z4"}) {
        auto spec = parse_ring(text);
        auto P = construct_ring(spec);
        auto L = IdealLattice::build(P);
        auto R1 = construct_ring(spec.children[0]), R2 = construct_ring(spec.children[1]);
        auto L1 = IdealLattice::build(R1), L2 = IdealLattice::build(R2);
        for (const auto& a : catalog(R1, L1))
            for (const auto& b : catalog(R2, L2)) {
                auto dx = derive_product_expansion(a, b, L);
                bool some_proper = false;
                for (const auto& I : *L) some_proper = some_proper || (I.is_proper() && dx.apply(I).is_proper());
                if (!some_proper) continue;
                ++pairs;
                auto s = delta_n_spectrum(dx);
                if (!s.all.empty()) {
                    ++nonempty;
                    if (example.empty())
                        example = std::string(text) + " " + dx.to_string() + " has " + s.all.front().to_string() + " with value " +
                                  dx.apply(s.all.front()).to_string();
                }
                for (const auto& I : s.all) per_ideal_failures += dx.apply(I).is_proper();
            }
    }
    return {nonempty == 0, std::to_string(nonempty) + " of " + std::to_string(pairs) + " pairs have a nonempty spectrum" +
                               (example.empty() ? "" : " (e.g. " + example + ")") + "; members with a proper value: " +
                               std::to_string(per_ideal_failures)};
}

// 7. I is delta-n iff I(+)N is delta_(+)-n, over both idealizations.
Outcome idealization_equivalence() {
    std::size_t checked = 0, mismatches = 0;
    for (const char* text : {"Z4 (+) Z4", "Z8 (+) quot(Z8, (4))"}) {
        auto spec = parse_ring(text);
        auto base = construct_ring(spec.children[0]);
        auto ide = idealization(base, make_module(base, spec.children[1]));
        auto L = IdealLattice::build(ide.ring);
        auto subs = enumerate_submodules(ide.module);
        for (const auto& d : catalog(base, IdealLattice::build(base))) {
            auto dp = derive_idealization_expansion(d, ide, L);
            for (const auto& I : d.lattice()) {
                if (!I.is_proper()) continue;
                for (const auto& N : subs) {
                    if (!ide.admits(I, N)) continue;
                    ++checked;
                    mismatches += is_delta_n_ideal(I, d) != is_delta_n_ideal(ide.homogeneous_ideal(I, N), dp);
                }
            }
        }
    }
    return {checked > 0 && mismatches == 0, std::to_string(checked) + " (I, N, delta) triples, " + std::to_string(mismatches) + " mismatches"};
}

// 8. Quotient and localization transfer.
Outcome transfer() {
    Outcome o;
    for (const char* id : {"cor-quotient-transfer", "cor-quotient-lift-nil", "cor-quotient-lift-dn", "prop-localization-transfer",
                           "prop-localization-lift"}) {
        auto r = claim(id);
        o.pass = o.pass && r.failed == 0 && r.holds > 0;
        o.detail += std::string(id) + " holds " + std::to_string(r.holds) + "/not met " + std::to_string(r.hypothesis_not_met) + "/failed " +
                    std::to_string(r.failed) + "; ";
    }
    return o;
}

// 9. field <=> von Neumann regular and {0} delta-n, for every zero-fixing delta.
Outcome von_neumann() {
    std::size_t checked = 0, bad = 0, z2z2_right_side = 0;
    for (const auto& r : corpus_context().rings) {
        auto rc = classify_ring(r->ring());
        auto zero = zero_ideal(r->ring());
        for (const auto& e : r->expansions) {
            if (!e.d.apply(zero).is_zero()) continue;
            ++checked;
            bool right = rc.is_von_neumann_regular && is_delta_n_ideal(zero, e.d);
            bad += rc.is_field != right;
            if (r->name() == "Z2 x Z2") z2z2_right_side += right;
        }
    }
    auto z2z2 = classify_ring(construct_ring(parse_ring("Z2 x Z2")));
    bool shape = z2z2.is_von_neumann_regular && !z2z2.is_field && z2z2_right_side == 0;
    return {bad == 0 && checked > 0 && shape, std::to_string(checked) + " instances, " + std::to_string(bad) +
                                                  " failures; Z2 x Z2 regular " + yes(z2z2.is_von_neumann_regular) +
                                                  ", {0} delta-n for " + std::to_string(z2z2_right_side) + " zero-fixing deltas"};
}

// 10. (x+1) is the unit ideal of Z4[x]/(x^3) and the audit flags the example.
Outcome example_audit() {
    auto R = construct_ring(parse_ring("Z4[x]/(x^3)"));
    bool product_one = R.mul(R.bind(parse_element("1+x")), R.bind(parse_element("1+3x+x^2"))) == R.one();
    bool unit = !bind_ideal(R, "(x+1)").is_proper();
    auto rep = claim("example-e3-audit");
    bool flagged = false;
    for (const auto& n : rep.notes) flagged = flagged || n.find("contradicts") != std::string::npos;
    return {product_one && unit && rep.failed == 0 && flagged,
            "(1+x)(1+3x+x^2)=1 " + yes(product_one) + ", (x+1)=R " + yes(unit) + ", audit failures " + std::to_string(rep.failed) +
                ", example flagged " + yes(flagged)};
}

// 11. Ideal enumeration, radical and colon against brute force on rings of at most 16 elements.
Outcome oracles() {
    std::size_t rings = 0, bad = 0;
    for (const auto& r : corpus_context().rings) {
        const Ring& R = r->ring();
        const auto n = R.n();
        if (n > 16) continue;
        ++rings;
        std::set<std::vector<bool>> brute;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            auto in = [&](Index x) { return (mask >> x) & 1u; };
            if (!in(R.zero_index())) continue;
            bool ideal = true;
            for (Index a = 0; a < n && ideal; ++a) {
                if (!in(a)) continue;
                for (Index b = 0; b < n && ideal; ++b) ideal = (!in(b) || in(R.add(a, b))) && in(R.mul(a, b));
            }
            if (!ideal) continue;
            std::vector<bool> v(n);
            for (Index x = 0; x < n; ++x) v[x] = in(x);
            brute.insert(v);
        }
        std::set<std::vector<bool>> lib;
        for (const auto& I : r->lattice()) {
            std::vector<bool> v(n);
            for (Index x = 0; x < n; ++x) v[x] = I.contains(x);
            lib.insert(v);
            auto rad = radical(I);
            for (Index x = 0; x < n; ++x) {
                bool in_rad = false;
                Index p = x;
                for (std::size_t k = 0; k <= n && !in_rad; ++k, p = R.mul(p, x)) in_rad = I.contains(p);
                bad += rad.contains(x) != in_rad;
                auto col = colon(I, R.element(x));
                for (Index y = 0; y < n; ++y) bad += col.contains(y) != I.contains(R.mul(y, x));
            }
        }
        bad += lib != brute || lib.size() != r->size();
    }
    return {bad == 0 && rings > 0, std::to_string(rings) + " rings, " + std::to_string(bad) + " mismatches"};
}

// 12. sqrt(0) is delta-n iff every zero divisor of R/sqrt(0) lies in delta_q(0).
Outcome zero_divisors() {
    std::size_t checked = 0, bad = 0;
    for (const auto& r : corpus_context().rings) {
        const Ring& R = r->ring();
        auto nil = nilradical(R);
        auto q = quotient_ring(R, nil);
        const Ring& Q = q.ring;
        auto zd = special_sets(Q).zero_divisors;
        for (const auto& e : r->expansions) {
            ++checked;
            auto dq0 = derive_quotient_expansion(e.d, q).apply(zero_ideal(Q));
            bool right = true;
            zd.for_each([&](std::size_t z) { right = right && dq0.contains(static_cast<Index>(z)); });
            bad += is_delta_n_ideal(nil, e.d) != right;
        }
    }
    return {bad == 0 && checked > 0, std::to_string(checked) + " instances, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"four-way equivalence", four_way},
        {"Z6 counterexample", z6_counterexample},
        {"ZZ d+ example", zz_delta_plus},
        {"every-ideal equivalence", every_ideal},
        {"existence equivalence", existence},
        {"product obstruction", product_obstruction},
        {"idealization equivalence", idealization_equivalence},
        {"quotient and localization transfer", transfer},
        {"von Neumann regular equivalence", von_neumann},
        {"Z4[x]/(x^3) example audit", example_audit},
        {"oracle equivalence", oracles},
        {"zero-divisor criterion", zero_divisors},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail << "\n";
    }
    std::cout << criteria.size() - failed << " of " << criteria.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
