#include <gtest/gtest.h>

#include "dni/constructions.hpp"

using namespace dni;

namespace {

RingSpec Z(std::int64_t n) { return RingSpec::modular_ring(n); }
ElemExpr E(std::int64_t v) { return ElemExpr::integer(v); }

}  // namespace

TEST(Constructions, HomomorphismValidation) {
    auto R = make_modular_ring(12), S = make_modular_ring(4), T = make_modular_ring(5);
    auto f = make_homomorphism(R, S, [&](const Element& a) { return S.element(a.index() % 4); });
    EXPECT_TRUE(f.surjective());
    EXPECT_FALSE(f.injective());
    EXPECT_EQ(f.kernel(), ideal_from_generators(R, {R.element(4)}));
    EXPECT_THROW(make_homomorphism(R, T, [&](const Element& a) { return T.element(a.index() % 5); }), AlgebraError);
    // x -> 2x is additive but not multiplicative on Z4.
    EXPECT_THROW(make_homomorphism(S, S, [&](const Element& a) { return S.element(2 * a.index() % 4); }), AlgebraError);
}

TEST(Constructions, ImageAndPreimage) {
    auto R = make_modular_ring(12), S = make_modular_ring(4);
    auto f = make_homomorphism(R, S, [&](const Element& a) { return S.element(a.index() % 4); });
    auto K = ideal_from_generators(S, {S.element(2)});
    EXPECT_EQ(preimage_ideal(f, K), ideal_from_generators(R, {R.element(2)}));
    EXPECT_EQ(image_ideal(f, ideal_from_generators(R, {R.element(3)})), unit_ideal(S));
    EXPECT_THROW(make_homomorphism(S, R, [&](const Element&) { return R.zero(); }), AlgebraError);
}

TEST(Constructions, ReductionFromIntegers) {
    auto ZZ = make_integer_ring(), Z6 = make_modular_ring(6);
    auto f = make_reduction_homomorphism(ZZ, Z6);
    EXPECT_EQ(f.kernel().integer_generator(), 6);
    EXPECT_EQ(preimage_ideal(f, ideal_from_generators(Z6, {Z6.element(2)})).integer_generator(), 2);
    EXPECT_EQ(image_ideal(f, Ideal::integer_multiples(ZZ, 4)), ideal_from_generators(Z6, {Z6.element(2)}));
}

TEST(Constructions, QuotientRing) {
    auto R = make_modular_ring(12);
    auto q = quotient_ring(R, ideal_from_generators(R, {R.element(4)}));
    EXPECT_EQ(q.ring.size(), 4u);
    EXPECT_EQ(to_string(q.ring.spec()), "quot(Z12, (4))");
    EXPECT_EQ(enumerate_ideals(q.ring).size(), 3u);
    EXPECT_THROW(quotient_ring(R, unit_ideal(R)), AlgebraError);
    // Correspondence: ideals of R/J are images of ideals containing J.
    std::size_t above = 0;
    for (auto& I : enumerate_ideals(R))
        if (q.modulus.subset_of(I)) {
            ++above;
            EXPECT_EQ(q.preimage(q.image(I)), I);
        }
    EXPECT_EQ(above, enumerate_ideals(q.ring).size());
}

TEST(Constructions, QuotientOfPolynomialRing) {
    auto R = construct_ring(RingSpec::poly_quotient_ring(Z(4), {0, 0, 0, 1}));
    auto q = quotient_ring(R, ideal_from_exprs(R, {E(2)}));
    EXPECT_EQ(q.ring.size(), 8u);
    EXPECT_TRUE(classify_ring(q.ring).is_quasi_local);
}

TEST(Constructions, ModulesAndSubmodules) {
    auto R = make_modular_ring(8);
    auto M = make_module(R, RingSpec::quotient_ring(Z(8), {E(4)}));
    EXPECT_EQ(M.size(), 4u);
    EXPECT_EQ(enumerate_submodules(M).size(), 3u);
    EXPECT_EQ(enumerate_submodules(make_module(R, Z(8))).size(), 4u);
    EXPECT_THROW(make_module(R, Z(3)), AlgebraError);
}

TEST(Constructions, Idealization) {
    auto R = make_modular_ring(4);
    auto ide = idealization(R, make_module(R, Z(4)));
    EXPECT_EQ(ide.ring.size(), 16u);
    auto subs = enumerate_submodules(ide.module);
    auto I2 = ideal_from_generators(R, {R.element(2)});
    Submodule zeroN = subs.front();
    EXPECT_FALSE(ide.admits(I2, zeroN));
    EXPECT_THROW(ide.homogeneous_ideal(I2, zeroN), AlgebraError);
    for (auto& N : subs)
        for (auto& I : enumerate_ideals(R)) {
            if (!ide.admits(I, N)) continue;
            auto K = ide.homogeneous_ideal(I, N);
            EXPECT_EQ(K.size(), I.size() * N.members.count());
            EXPECT_TRUE(ide.is_homogeneous(K));
            EXPECT_EQ(ide.projection(K), I);
        }
    // ((2,1)) = {(0,0), (2,1), (0,2), (2,3)} projects onto (2) but misses (2,0).
    auto K = ideal_from_generators(ide.ring, {ide.ring.element(ide.pair_index(2, 1))});
    EXPECT_EQ(K.size(), 4u);
    EXPECT_FALSE(ide.is_homogeneous(K));
    std::size_t mixed = 0;
    for (auto& J : enumerate_ideals(ide.ring)) mixed += !ide.is_homogeneous(J);
    EXPECT_EQ(mixed, 1u);
    // The nilradical of R (+) M is sqrt(0) (+) M.
    auto nil = nilradical(ide.ring);
    EXPECT_EQ(nil.size(), 2u * 4u);
}

TEST(Constructions, MultiplicativeSets) {
    auto R = make_modular_ring(12);
    EXPECT_THROW(make_multiplicative_set(R, {R.element(4)}), AlgebraError);
    EXPECT_THROW(make_multiplicative_set(R, {R.element(1), R.element(2)}), AlgebraError);
    EXPECT_THROW(make_multiplicative_set(R, {R.element(1), R.element(0)}), AlgebraError);
    auto S = multiplicative_closure(R, {2});
    EXPECT_TRUE(S.contains(1) && S.contains(4) && S.contains(8));
}

TEST(Constructions, Localization) {
    auto R = make_modular_ring(12);
    auto loc = localize(R, make_multiplicative_set(R, {R.element(1), R.element(4)}));
    EXPECT_EQ(loc.ring.size(), 3u);
    EXPECT_TRUE(classify_ring(loc.ring).is_field);
    auto loc3 = localize(R, multiplicative_closure(R, {3}));
    EXPECT_EQ(loc3.ring.size(), 4u);
    // Localizing at units changes nothing.
    auto locU = localize(R, make_multiplicative_set(R, {R.element(1), R.element(5), R.element(7), R.element(11)}));
    EXPECT_EQ(locU.ring.size(), 12u);
    // Extension of a contraction returns the ideal.
    for (auto& K : enumerate_ideals(loc3.ring)) EXPECT_EQ(loc3.extend(loc3.contract(K)), K);
}

TEST(Constructions, ConstructRingFromRecipes) {
    auto R = construct_ring(RingSpec::localization_ring(Z(12), {E(1), E(3), E(9)}));
    EXPECT_EQ(R.size(), 4u);
    auto Q = construct_ring(RingSpec::quotient_ring(RingSpec::product_ring(Z(2), Z(4)), {ElemExpr::pair(E(0), E(2))}));
    EXPECT_EQ(Q.size(), 4u);
    auto I = construct_ring(RingSpec::idealization_ring(Z(8), RingSpec::quotient_ring(Z(8), {E(4)})));
    EXPECT_EQ(I.size(), 32u);
}
