#include <gtest/gtest.h>

#include <set>

#include "dni/constructions.hpp"
#include "dni/ideal.hpp"

using namespace dni;

namespace {

RingSpec Z(std::int64_t n) { return RingSpec::modular_ring(n); }

std::vector<RingSpec> small_rings() {
    std::vector<RingSpec> out;
    for (std::int64_t n = 2; n <= 16; ++n) out.push_back(Z(n));
    out.push_back(RingSpec::poly_quotient_ring(Z(4), {0, 0, 1}));
    out.push_back(RingSpec::poly_quotient_ring(Z(2), {0, 0, 1}));
    out.push_back(RingSpec::poly_quotient_ring(Z(2), {0, 0, 0, 1}));
    out.push_back(RingSpec::poly_quotient_ring(Z(2), {1, 1, 1}));
    out.push_back(RingSpec::product_ring(Z(2), Z(2)));
    out.push_back(RingSpec::product_ring(Z(2), Z(4)));
    out.push_back(RingSpec::idealization_ring(Z(2), Z(2)));
    out.push_back(RingSpec::idealization_ring(Z(4), Z(4)));
    return out;
}

// All subsets closed under addition, negation and multiplication by ring elements.
std::set<std::vector<std::size_t>> subset_oracle(const Ring& R) {
    const Index n = R.n();
    std::set<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto in = [&](Index x) { return (mask >> x) & 1u; };
        if (!in(R.zero_index())) continue;
        bool ok = true;
        for (Index a = 0; a < n && ok; ++a) {
            if (!in(a)) continue;
            for (Index b = 0; b < n && ok; ++b) {
                if (in(b) && !in(R.add(a, b))) ok = false;
                if (!in(R.mul(a, b))) ok = false;
            }
        }
        if (!ok) continue;
        std::vector<std::size_t> m;
        for (Index x = 0; x < n; ++x)
            if (in(x)) m.push_back(x);
        out.insert(m);
    }
    return out;
}

}  // namespace

TEST(IdealAlgebra, LatticeMatchesAllSubsetsOracle) {
    for (auto& s : small_rings()) {
        auto R = construct_ring(s);
        std::set<std::vector<std::size_t>> got;
        for (auto& I : enumerate_ideals(R)) got.insert(I.elements().members());
        EXPECT_EQ(got, subset_oracle(R)) << R.key();
    }
}

TEST(IdealAlgebra, LatticeOrdering) {
    auto L = IdealLattice::build(make_modular_ring(12));
    ASSERT_EQ(L->size(), 6u);
    EXPECT_TRUE((*L)[L->zero_index()].is_zero());
    EXPECT_FALSE((*L)[L->whole_index()].is_proper());
    for (std::size_t i = 1; i < L->size(); ++i) EXPECT_LE((*L)[i - 1].size(), (*L)[i].size());
}

TEST(IdealAlgebra, Z4xCubedLattice) {
    auto R = construct_ring(RingSpec::poly_quotient_ring(Z(4), {0, 0, 0, 1}));
    auto I = ideal_from_exprs(R, {ElemExpr::polynomial({1, 1})});
    EXPECT_FALSE(I.is_proper());
}

TEST(IdealAlgebra, RadicalMatchesIntegerRadical) {
    for (std::int64_t n = 2; n <= 64; ++n) {
        auto R = make_modular_ring(n);
        auto nil = nilradical(R);
        EXPECT_EQ(nil, ideal_from_generators(R, {R.element(detail::integer_radical(n) % n)})) << n;
    }
}

TEST(IdealAlgebra, RadicalAndColonMatchElementwiseDefinitions) {
    for (auto& s : small_rings()) {
        auto R = construct_ring(s);
        for (auto& I : enumerate_ideals(R)) {
            auto rad = radical(I);
            for (Index r = 0; r < R.n(); ++r) {
                bool power_in = false;
                Index p = r;
                for (Index k = 0; k <= R.n() && !power_in; ++k, p = R.mul(p, r)) power_in = I.contains(p);
                EXPECT_EQ(rad.contains(r), power_in);
            }
            for (Index x = 0; x < R.n(); ++x) {
                auto c = colon(I, R.element(x));
                for (Index r = 0; r < R.n(); ++r) EXPECT_EQ(c.contains(r), I.contains(R.mul(r, x)));
            }
            for (auto& P : enumerate_ideals(R)) {
                auto c = colon(I, P);
                for (Index r = 0; r < R.n(); ++r) {
                    bool all = true;
                    P.elements().for_each([&](std::size_t p) { all = all && I.contains(R.mul(r, static_cast<Index>(p))); });
                    EXPECT_EQ(c.contains(r), all);
                }
            }
        }
    }
}

TEST(IdealAlgebra, LatticeInvariants) {
    for (auto& s : small_rings()) {
        auto R = construct_ring(s);
        auto ideals = enumerate_ideals(R);
        for (auto& I : ideals) {
            EXPECT_TRUE(I.subset_of(radical(I)));
            EXPECT_EQ(radical(radical(I)), radical(I));
            for (auto& J : ideals) {
                auto sum = ideal_sum(I, J), prod = ideal_product(I, J), meet = ideal_intersect(I, J);
                EXPECT_TRUE(prod.subset_of(meet));
                EXPECT_TRUE(meet.subset_of(I) && I.subset_of(sum));
                EXPECT_EQ(radical(prod), radical(meet));
            }
        }
    }
}

TEST(IdealAlgebra, IntegerClosedForms) {
    auto ZZ = make_integer_ring();
    auto I6 = Ideal::integer_multiples(ZZ, 6), I4 = Ideal::integer_multiples(ZZ, 4);
    EXPECT_EQ(ideal_sum(I6, I4).integer_generator(), 2);
    EXPECT_EQ(ideal_intersect(I6, I4).integer_generator(), 12);
    EXPECT_EQ(ideal_product(I6, I4).integer_generator(), 24);
    EXPECT_EQ(radical(Ideal::integer_multiples(ZZ, 12)).integer_generator(), 6);
    EXPECT_EQ(colon(I6, ZZ.element(4)).integer_generator(), 3);
    EXPECT_EQ(colon(zero_ideal(ZZ), ZZ.element(0)).integer_generator(), 1);
    EXPECT_TRUE(Ideal::integer_multiples(ZZ, -6) == I6);
    EXPECT_TRUE(I6.contains(ZZ.element(-12)));
}

TEST(IdealAlgebra, ClassifyIdeal) {
    auto R = make_modular_ring(12);
    auto c = classify_ideal(ideal_from_generators(R, {R.element(2)}));
    EXPECT_TRUE(c.is_prime && c.is_maximal && c.is_primary);
    auto z = classify_ideal(zero_ideal(R));
    EXPECT_FALSE(z.is_prime);
    EXPECT_FALSE(z.is_primary);
    EXPECT_TRUE(classify_ideal(ideal_from_generators(R, {R.element(4)})).is_primary);

    auto ZZ = make_integer_ring();
    EXPECT_TRUE(classify_ideal(Ideal::integer_multiples(ZZ, 7)).is_maximal);
    EXPECT_TRUE(classify_ideal(Ideal::integer_multiples(ZZ, 0)).is_prime);
    EXPECT_FALSE(classify_ideal(Ideal::integer_multiples(ZZ, 0)).is_maximal);
    EXPECT_TRUE(classify_ideal(Ideal::integer_multiples(ZZ, 8)).is_primary);
    EXPECT_FALSE(classify_ideal(Ideal::integer_multiples(ZZ, 6)).is_primary);
    EXPECT_TRUE(classify_ideal(Ideal::integer_multiples(ZZ, 0)).is_superfluous);
}

// Superfluous ideals of a finite ring are exactly those inside the Jacobson radical.
TEST(IdealAlgebra, SuperfluousIffInsideJacobson) {
    for (auto& s : small_rings()) {
        auto R = construct_ring(s);
        auto L = IdealLattice::build(R);
        auto jac = special_sets(R).jacobson;
        for (auto& I : *L) EXPECT_EQ(classify_ideal(I, *L).is_superfluous, I.subset_of(jac)) << R.key();
    }
}

TEST(IdealAlgebra, ZSetDefinition) {
    auto R = make_modular_ring(12);
    auto I = ideal_from_generators(R, {R.element(4)});
    auto z = z_set(I);
    for (Index r = 0; r < 12; ++r) {
        bool want = false;
        for (Index s = 0; s < 12; ++s) want = want || (!I.contains(s) && I.contains(R.mul(r, s)));
        EXPECT_EQ(z.test(r), want);
    }
}

TEST(IdealAlgebra, CrossRingRejected) {
    auto A = make_modular_ring(6), B = make_modular_ring(8);
    EXPECT_THROW(ideal_sum(zero_ideal(A), zero_ideal(B)), AlgebraError);
}
