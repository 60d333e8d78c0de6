#include "error_code.hpp"
#include "oracles.hpp"

#include "sos3/error.hpp"
#include "sos3/family.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sos3;

namespace {

RatFunc F(const char* s) { return parse_ratfunc(s); }
Poly P(const char* s) { return parse_poly(s); }

RatFunc random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-6, 6), deg(0, 3);
    auto poly = [&] {
        std::vector<Rational> v;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) v.push_back(Rational(c(rng)));
        if (v.back() == 0) v.back() = 1;
        return Poly(v);
    };
    return RatFunc(poly(), poly());
}

} // namespace

TEST(RatFuncTest, NormalForm) {
    RatFunc r = F("(x^2-1)/(2x-2)");
    EXPECT_EQ(r.num(), P("x/2 + 1/2"));
    EXPECT_EQ(r.den(), Poly(1));
    EXPECT_EQ(F("x/(2x^2+2)").den(), P("x^2+1"));
    EXPECT_EQ(r * RatFunc(2), F("x+1"));
    EXPECT_EQ(error_code([] { RatFunc(P("x"), Poly()); }), Errc::division_by_zero_polynomial);
}

TEST(RatFuncTest, Valuations) {
    EXPECT_EQ(valuation(F("x^3/(x+1)"), Place::finite(P("x"))), 3);
    EXPECT_EQ(valuation(F("x^3/(x+1)"), Place::finite(P("x+1"))), -1);
    EXPECT_EQ(valuation(F("x^3/(x+1)"), Place::infinity()), -2);
    EXPECT_EQ(valuation(F("(x^2+1)^2"), Place::finite(P("2x^2+2"))), 2);
    EXPECT_EQ(poly_valuation(P("(x-3)^4 (x+1)"), P("x-3")), 4);
    EXPECT_EQ(error_code([] { Place::finite(P("x^2-1")); }), Errc::unsupported_place);
    EXPECT_EQ(error_code([] { Place::finite(P("x^3+x+1")); }), Errc::unsupported_place);
    EXPECT_EQ(error_code([] { valuation(RatFunc(), Place::infinity()); }), Errc::zero_input);
}

TEST(RatFuncTest, ValuationIsAdditive) {
    std::mt19937 rng(2);
    const Place places[] = {Place::infinity(), Place::finite(P("x")), Place::finite(P("x-1")),
                            Place::finite(P("x^2+1"))};
    for (int i = 0; i < 60; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        if (a.is_zero() || b.is_zero()) continue;
        for (const auto& p : places) EXPECT_EQ(valuation(a * b, p), valuation(a, p) + valuation(b, p));
    }
}

TEST(SquareClassTest, Representatives) {
    EXPECT_EQ(square_class(F("4(x^2-1)/9")).rep(), P("x^2-1"));
    EXPECT_TRUE(square_class(F("x^4")).is_trivial());
    EXPECT_EQ(square_class(F("-8x^3")).rep(), P("-2x"));
    EXPECT_EQ(square_class(F("3/(x+1)")).rep(), P("3x+3"));
    EXPECT_EQ(square_class(F("-1")).rep(), Poly(-1));
    EXPECT_EQ(error_code([] { square_class(RatFunc()); }), Errc::zero_input);
}

TEST(SquareClassTest, MatchesSquareTest) {
    EXPECT_TRUE(is_square(F("(x+1)^2/4")));
    EXPECT_FALSE(is_square(F("-(x+1)^2")));
    EXPECT_FALSE(is_square(F("2x^2")));
    auto r = ratfunc_sqrt(F("9(x^2+1)^2/(x-1)^4"));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r * *r, F("9(x^2+1)^2/(x-1)^4"));
}

TEST(SquareClassTest, Multiplicative) {
    std::mt19937 rng(17);
    for (int i = 0; i < 80; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        if (a.is_zero() || b.is_zero()) continue;
        EXPECT_EQ(square_class(a * b), square_class(a) * square_class(b));
        EXPECT_TRUE(square_class(a * a).is_trivial());
        EXPECT_EQ(square_class(a).is_trivial(), is_square(a));
    }
}

TEST(PlaceTest, ResidueEquivalence) {
    EXPECT_TRUE(equiv_mod_place(F("x+4"), F("1"), Place::finite(P("x"))));
    EXPECT_FALSE(equiv_mod_place(F("x+2"), F("1"), Place::finite(P("x"))));
    EXPECT_TRUE(equiv_mod_place(F("x+2"), F("2"), Place::finite(P("x"))));
    EXPECT_EQ(error_code([] { equiv_mod_place(F("x"), F("1"), Place::finite(P("x"))); }), Errc::nonzero_valuation);
    EXPECT_EQ(error_code([] { equiv_mod_place(F("x"), F("1"), Place::infinity()); }), Errc::unsupported_place);
}

TEST(PlaceTest, InstanceResidue) {
    auto inst = build_family({Rational(23), Rational(34), Rational(547)});
    Place p = Place::finite(Poly(1) - inst.C);
    // (B - C) reduces to 388505/4 there, not a square.
    EXPECT_FALSE(equiv_mod_place(RatFunc(inst.B - inst.C), RatFunc(1), p));
    EXPECT_TRUE(equiv_mod_place(RatFunc(inst.B - inst.C), RatFunc(Rational(388505)), p));
}

TEST(QuadExtTest, Examples) {
    // (1 + U)^2 = 1 + 2 + 2U with U^2 = 2.
    EXPECT_TRUE(quad_ext_square_test(F("2"), F("3"), F("2")));
    EXPECT_FALSE(quad_ext_square_test(F("1"), F("3"), F("2")));
    EXPECT_TRUE(quad_ext_square_test(F("0"), F("2"), F("2")));
    EXPECT_FALSE(quad_ext_square_test(F("0"), F("3"), F("2")));
    EXPECT_TRUE(quad_ext_square_test(F("0"), F("x"), F("x")));
    EXPECT_EQ(error_code([] { quad_ext_square_test(F("1"), F("1"), F("4x^2")); }), Errc::delta_is_square);
}

TEST(QuadExtTest, SquaresAreDetected) {
    std::mt19937 rng(4);
    const RatFunc deltas[] = {F("x"), F("x^2+1"), F("-3"), F("2x-5")};
    for (int i = 0; i < 40; ++i) {
        RatFunc p = random_ratfunc(rng), q = random_ratfunc(rng);
        const RatFunc& delta = deltas[i % 4];
        if (q.is_zero()) continue;
        EXPECT_TRUE(quad_ext_square_test(RatFunc(2) * p * q, p * p + q * q * delta, delta));
    }
}

TEST(PsdTest, Examples) {
    EXPECT_TRUE(is_psd(F("x^2+1")));
    EXPECT_FALSE(is_psd(F("x")));
    EXPECT_TRUE(is_psd(F("x^2")));
    EXPECT_FALSE(is_psd(F("-x^2")));
    EXPECT_TRUE(is_psd(F("(x-1)^2 (x^2+3)/(x^4+1)")));
    EXPECT_FALSE(is_psd(F("(x-1)^3")));
    EXPECT_FALSE(is_psd(F("x^2-2")));
    EXPECT_EQ(error_code([] { is_psd(RatFunc()); }), Errc::zero_input);
}

TEST(PsdTest, InvariantUnderSquareMultiplier) {
    std::mt19937 rng(9);
    for (int i = 0; i < 60; ++i) {
        RatFunc a = random_ratfunc(rng), h = random_ratfunc(rng);
        if (a.is_zero() || h.is_zero()) continue;
        EXPECT_EQ(is_psd(a), is_psd(a * h * h));
        EXPECT_TRUE(is_psd(h * h));
    }
}
