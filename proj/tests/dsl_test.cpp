#include <gtest/gtest.h>

#include "dni/dsl.hpp"

using namespace dni;

namespace {

RingSpec Z(std::int64_t n) { return RingSpec::modular_ring(n); }
ElemExpr E(std::int64_t v) { return ElemExpr::integer(v); }

Diagnostic diagnose(std::string_view text) {
    try {
        parse_ring(text);
    } catch (const ParseError& e) {
        return e.diagnostic();
    }
    ADD_FAILURE() << "parsed: " << text;
    return {};
}

}  // namespace

TEST(Dsl, Rings) {
    EXPECT_EQ(parse_ring("Z4[x]/(x^3)"), RingSpec::poly_quotient_ring(Z(4), {0, 0, 0, 1}));
    EXPECT_EQ(parse_ring("Z4 x Z9"), RingSpec::product_ring(Z(4), Z(9)));
    EXPECT_EQ(parse_ring("Z4xZ9"), RingSpec::product_ring(Z(4), Z(9)));
    EXPECT_EQ(parse_ring("ZZ"), RingSpec::integers());
    EXPECT_EQ(parse_ring("Z2 x Z2 x Z2"), RingSpec::product_ring(RingSpec::product_ring(Z(2), Z(2)), Z(2)));
    EXPECT_EQ(parse_ring("Z8 (+) quot(Z8, (4))"), RingSpec::idealization_ring(Z(8), RingSpec::quotient_ring(Z(8), {E(4)})));
    EXPECT_EQ(parse_ring("loc(Z12, {1,4})"), RingSpec::localization_ring(Z(12), {E(1), E(4)}));
    EXPECT_EQ(parse_ring("Z2[x]/([1,1,1])"), RingSpec::poly_quotient_ring(Z(2), {1, 1, 1}));
    EXPECT_EQ(parse_ring(" Z2[x]/( x^2 + x + 1 ) "), RingSpec::poly_quotient_ring(Z(2), {1, 1, 1}));
}

TEST(Dsl, Precedence) {
    // "(+)" binds tighter than "x".
    EXPECT_EQ(parse_ring("Z2 (+) Z2 x Z3"),
              RingSpec::product_ring(RingSpec::idealization_ring(Z(2), Z(2)), Z(3)));
    EXPECT_EQ(parse_ring("Z2 x (Z2 x Z3)"), RingSpec::product_ring(Z(2), RingSpec::product_ring(Z(2), Z(3))));
}

TEST(Dsl, Elements) {
    EXPECT_EQ(parse_element("1+3x+x^2"), ElemExpr::polynomial({1, 3, 1}));
    EXPECT_EQ(parse_element("x^2 + 3*x + 1"), ElemExpr::polynomial({1, 3, 1}));
    EXPECT_EQ(parse_element("-2"), E(-2));
    EXPECT_EQ(parse_element("<1,x>"), ElemExpr::pair(E(1), ElemExpr::polynomial({0, 1})));
    EXPECT_EQ(parse_element("3/4"), ElemExpr::frac(E(3), E(4)));
    EXPECT_EQ(parse_element("(1+x)/3"), ElemExpr::frac(ElemExpr::polynomial({1, 1}), E(3)));
    EXPECT_EQ(parse_ideal("(2,x)"), (std::vector<ElemExpr>{E(2), ElemExpr::polynomial({0, 1})}));
    EXPECT_TRUE(parse_ideal("()").empty());
}

TEST(Dsl, Expansions) {
    EXPECT_EQ(parse_expansion("d0"), ExpansionRecipe::d0());
    EXPECT_EQ(parse_expansion("d+((3))"), ExpansionRecipe::plus({E(3)}));
    EXPECT_EQ(parse_expansion("d*((2, x))"), ExpansionRecipe::star({E(2), ElemExpr::polynomial({0, 1})}));
    EXPECT_EQ(parse_expansion("d1 o d+((2))"), ExpansionRecipe::compose(ExpansionRecipe::d1(), ExpansionRecipe::plus({E(2)})));
    EXPECT_EQ(parse_expansion("d1 o d0 o full"),
              ExpansionRecipe::compose(ExpansionRecipe::compose(ExpansionRecipe::d1(), ExpansionRecipe::d0()), ExpansionRecipe::full()));
}

TEST(Dsl, Diagnostics) {
    auto d = diagnose("Z6 )");
    EXPECT_EQ(d.line, 1u);
    EXPECT_EQ(d.column, 4u);
    EXPECT_EQ(d.offset, 3u);
    EXPECT_EQ(d.found, "')'");
    EXPECT_NE(std::find(d.expected.begin(), d.expected.end(), "end of input"), d.expected.end());
    EXPECT_NE(std::find(d.expected.begin(), d.expected.end(), "'x'"), d.expected.end());

    auto m = diagnose("Z4 x\n  Q");
    EXPECT_EQ(m.line, 2u);
    EXPECT_EQ(m.column, 3u);

    EXPECT_EQ(diagnose("Z").found, "end of input");
    EXPECT_EQ(diagnose("Z-3").found, "'-'");
    EXPECT_THROW(parse_expansion("d2"), ParseError);
    EXPECT_THROW(parse_ideal("(1,"), ParseError);
    try {
        parse_ring("Z99999999999999999999");
        FAIL();
    } catch (const AlgebraError& e) {
        EXPECT_EQ(e.code(), Errc::parse_error);
    }
}

TEST(Dsl, RoundTrip) {
    std::vector<RingSpec> rings = {Z(6), RingSpec::integers(), RingSpec::poly_quotient_ring(Z(4), {0, 0, 0, 1}),
                                   RingSpec::poly_quotient_ring(Z(2), {1, 1, 1}), RingSpec::product_ring(Z(4), Z(9)),
                                   RingSpec::product_ring(Z(2), RingSpec::product_ring(Z(2), Z(2))),
                                   RingSpec::idealization_ring(Z(8), RingSpec::quotient_ring(Z(8), {E(4)})),
                                   RingSpec::idealization_ring(RingSpec::product_ring(Z(2), Z(2)), Z(2)),
                                   RingSpec::quotient_ring(RingSpec::product_ring(Z(2), Z(4)), {ElemExpr::pair(E(0), E(2))}),
                                   RingSpec::localization_ring(Z(12), {E(1), E(4)})};
    for (auto& r : rings) EXPECT_EQ(parse_ring(to_string(r)), r) << to_string(r);

    std::vector<ExpansionRecipe> exps = {
        ExpansionRecipe::d0(), ExpansionRecipe::full(), ExpansionRecipe::plus({ElemExpr::polynomial({1, 3, 1})}),
        ExpansionRecipe::star({ElemExpr::polynomial({0, -2, 1})}),
        ExpansionRecipe::compose(ExpansionRecipe::d1(), ExpansionRecipe::compose(ExpansionRecipe::d0(), ExpansionRecipe::full()))};
    for (auto& e : exps) EXPECT_EQ(parse_expansion(to_string(e)), e) << to_string(e);

    std::vector<ElemExpr> elems = {E(0), E(-5), ElemExpr::polynomial({-1, 0, -3}),
                                   ElemExpr::frac(ElemExpr::polynomial({1, 1}), E(-2)),
                                   ElemExpr::pair(ElemExpr::frac(E(1), E(3)), E(2))};
    for (auto& e : elems) EXPECT_EQ(parse_element(to_string(e)), e) << to_string(e);
}

TEST(Dsl, Binding) {
    auto R = construct_ring(parse_ring("Z4[x]/(x^3)"));
    EXPECT_FALSE(bind_ideal(R, "(x+1)").is_proper());
    EXPECT_EQ(bind_ideal(R, "(2, x)").size(), 32u);
    EXPECT_EQ(bind_expansion(R, "d+((x))").to_string(), "d+((x))");
}
