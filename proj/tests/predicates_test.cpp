#include <gtest/gtest.h>

#include "dni/predicates.hpp"

using namespace dni;

namespace {

RingSpec Z(std::int64_t n) { return RingSpec::modular_ring(n); }
ElemExpr E(std::int64_t v) { return ElemExpr::integer(v); }

std::vector<Expansion> catalog(const Ring& R) {
    auto L = IdealLattice::build(R);
    std::vector<Expansion> out = {make_expansion(R, ExpansionRecipe::d0(), L), make_expansion(R, ExpansionRecipe::d1(), L),
                                  make_expansion(R, ExpansionRecipe::full(), L)};
    for (auto& J : *L)
        if (J.is_proper()) out.push_back(make_expansion(R, ExpansionRecipe::plus(J.generator_exprs()), L));
    for (auto& P : *L)
        if (!P.is_zero()) out.push_back(make_expansion(R, ExpansionRecipe::star(P.generator_exprs()), L));
    return out;
}

std::vector<RingSpec> rings() {
    return {Z(4), Z(6), Z(8), Z(12), Z(9), Z(30),
            RingSpec::poly_quotient_ring(Z(2), {0, 0, 0, 1}),
            RingSpec::poly_quotient_ring(Z(4), {0, 0, 1}),
            RingSpec::product_ring(Z(2), Z(4)),
            RingSpec::idealization_ring(Z(4), Z(4))};
}

// Bounded brute force over ZZ: a, b in [-B, B] with ab in nZZ, a != 0, b outside delta(nZZ).
bool integer_delta_n_bruteforce(std::int64_t n, std::int64_t dn) {
    const std::int64_t B = 40;
    for (std::int64_t a = -B; a <= B; ++a)
        for (std::int64_t b = -B; b <= B; ++b) {
            if (a == 0) continue;
            bool ab_in = n == 0 ? a * b == 0 : (a * b) % n == 0;
            bool b_in = dn == 0 ? b == 0 : b % dn == 0;
            if (ab_in && !b_in) return false;
        }
    return true;
}

}  // namespace

TEST(Predicates, Z6ZeroIdealWitness) {
    auto R = make_modular_ring(6);
    auto zero = zero_ideal(R);
    for (auto recipe : {ExpansionRecipe::d0(), ExpansionRecipe::d1()}) {
        auto v = check_delta_n_ideal(zero, make_expansion(R, recipe));
        EXPECT_FALSE(v.holds);
        ASSERT_EQ(v.elements.size(), 2u);
        EXPECT_EQ(R.format(v.elements[0]), "2");
        EXPECT_EQ(R.format(v.elements[1]), "3");
    }
    EXPECT_FALSE(is_quasi_n_ideal(zero));
    EXPECT_FALSE(is_n_ideal(zero));
}

TEST(Predicates, Z8Spectrum) {
    auto R = make_modular_ring(8);
    auto s = delta_n_spectrum(make_expansion(R, ExpansionRecipe::d0()));
    ASSERT_EQ(s.all.size(), 3u);
    EXPECT_TRUE(s.all[0].is_zero());
    EXPECT_EQ(s.all[1], ideal_from_generators(R, {R.element(4)}));
    EXPECT_EQ(s.all[2], ideal_from_generators(R, {R.element(2)}));
    ASSERT_EQ(s.maximal_members.size(), 1u);
    EXPECT_EQ(s.maximal_members[0], nilradical(R));
}

TEST(Predicates, Z12SpectrumEmpty) {
    auto R = make_modular_ring(12);
    EXPECT_TRUE(delta_n_spectrum(make_expansion(R, ExpansionRecipe::d0())).all.empty());
}

TEST(Predicates, ImproperRejected) {
    auto R = make_modular_ring(6);
    auto d = make_expansion(R, ExpansionRecipe::d0());
    EXPECT_THROW(check_delta_n_ideal(unit_ideal(R), d), AlgebraError);
    EXPECT_THROW(check_n_ideal(unit_ideal(R)), AlgebraError);
    EXPECT_THROW(check_delta_primary(unit_ideal(R), d), AlgebraError);
    try {
        check_n_ideal(unit_ideal(R));
    } catch (const AlgebraError& e) {
        EXPECT_EQ(e.code(), Errc::improper_ideal);
    }
}

TEST(Predicates, FourMethodsAgree) {
    for (auto& s : rings()) {
        auto R = construct_ring(s);
        for (auto& d : catalog(R))
            for (auto& I : d.lattice()) {
                if (!I.is_proper()) continue;
                auto want = is_delta_n_ideal(I, d);
                for (auto m : kAllMethods)
                    EXPECT_EQ(is_delta_n_ideal(I, d, m), want) << R.key() << " " << d.to_string() << " " << I.to_string() << " " << method_name(m);
            }
    }
}

TEST(Predicates, NIdealIsDeltaNForEveryExpansion) {
    for (auto& s : rings()) {
        auto R = construct_ring(s);
        for (auto& d : catalog(R))
            for (auto& I : d.lattice())
                if (I.is_proper() && is_n_ideal(I)) EXPECT_TRUE(is_delta_n_ideal(I, d));
    }
}

TEST(Predicates, DeltaPrimaryBelowNilradicalIsDeltaN) {
    for (auto& s : rings()) {
        auto R = construct_ring(s);
        auto nil = nilradical(R);
        for (auto& d : catalog(R)) {
            for (auto& I : d.lattice()) {
                if (!I.is_proper()) continue;
                bool dn = is_delta_n_ideal(I, d);
                if (I.subset_of(nil) && is_delta_primary(I, d)) EXPECT_TRUE(dn);
                if (dn && d.apply(I).is_proper()) EXPECT_TRUE(I.subset_of(nil)) << R.key() << " " << d.to_string() << " " << I.to_string();
            }
            EXPECT_EQ(is_delta_primary(nil, d), is_delta_n_ideal(nil, d)) << R.key() << " " << d.to_string();
        }
    }
}

TEST(Predicates, PrimaryIsRadicalPrimary) {
    for (auto& s : rings()) {
        auto R = construct_ring(s);
        auto d1 = make_expansion(R, ExpansionRecipe::d1());
        for (auto& I : d1.lattice())
            if (I.is_proper()) EXPECT_EQ(classify_ideal(I).is_primary, is_delta_primary(I, d1)) << R.key() << I.to_string();
    }
}

TEST(Predicates, WitnessesAreGenuine) {
    for (auto& s : rings()) {
        auto R = construct_ring(s);
        auto nil = nilradical(R);
        for (auto& d : catalog(R))
            for (auto& I : d.lattice()) {
                if (!I.is_proper()) continue;
                auto v = check_delta_n_ideal(I, d);
                if (v.holds) continue;
                ASSERT_EQ(v.elements.size(), 2u);
                auto a = v.elements[0], b = v.elements[1];
                EXPECT_TRUE(I.contains(R.mul(a, b)));
                EXPECT_FALSE(nil.contains(a));
                EXPECT_FALSE(d.apply(I).contains(b));
            }
    }
}

TEST(Predicates, IntegerAgainstBruteForce) {
    auto ZZ = make_integer_ring();
    std::vector<Expansion> ds = {make_expansion(ZZ, ExpansionRecipe::d0()), make_expansion(ZZ, ExpansionRecipe::d1()),
                                 make_expansion(ZZ, ExpansionRecipe::full()), make_expansion(ZZ, ExpansionRecipe::plus({E(3)})),
                                 make_expansion(ZZ, ExpansionRecipe::star({E(2)}))};
    for (auto& d : ds)
        for (std::int64_t n : {0, 2, 3, 4, 5, 6, 9, 12, 15}) {
            auto I = Ideal::integer_multiples(ZZ, n);
            for (auto m : kAllMethods)
                EXPECT_EQ(is_delta_n_ideal(I, d, m), integer_delta_n_bruteforce(n, d.apply_integer(n)))
                    << d.to_string() << " n=" << n;
        }
}

TEST(Predicates, IntegerDeltaPlusExample) {
    auto ZZ = make_integer_ring();
    auto I = Ideal::integer_multiples(ZZ, 5);
    EXPECT_TRUE(is_delta_n_ideal(I, make_expansion(ZZ, ExpansionRecipe::plus({E(3)}))));
    EXPECT_FALSE(is_delta_n_ideal(I, make_expansion(ZZ, ExpansionRecipe::d0())));
    EXPECT_FALSE(is_delta_n_ideal(I, make_expansion(ZZ, ExpansionRecipe::d1())));
    EXPECT_TRUE(is_n_ideal(zero_ideal(ZZ)));
}

TEST(Predicates, IntegerDeltaPrimaryAgainstBruteForce) {
    auto ZZ = make_integer_ring();
    auto d1 = make_expansion(ZZ, ExpansionRecipe::d1());
    for (std::int64_t n = 2; n <= 40; ++n) {
        auto r = d1.apply_integer(n);
        bool want = true;
        for (std::int64_t a = 1; a <= 2 * n && want; ++a)
            for (std::int64_t b = 1; b <= 2 * n && want; ++b)
                if ((a * b) % n == 0 && a % n != 0 && b % r != 0) want = false;
        EXPECT_EQ(is_delta_primary(Ideal::integer_multiples(ZZ, n), d1), want) << n;
    }
}

TEST(Predicates, DeltaNilpotents) {
    auto R = make_modular_ring(12);
    EXPECT_EQ(delta_nilpotents(R, make_expansion(R, ExpansionRecipe::d1())), nilradical(R));
}

TEST(Predicates, ObstructionSetDecidesDeltaN) {
    for (auto& s : rings()) {
        auto R = construct_ring(s);
        auto nil = nilradical(R);
        for (auto& d : catalog(R))
            for (auto& I : d.lattice())
                if (I.is_proper())
                    EXPECT_EQ(obstruction_set(I, nil).is_subset_of(d.apply(I).elements()), is_delta_n_ideal(I, d));
    }
}
