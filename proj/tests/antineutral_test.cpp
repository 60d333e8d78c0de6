#include "error_code.hpp"
#include "oracles.hpp"
#include "toy_curves.hpp"

#include "sos3/antineutral.hpp"
#include "sos3/family.hpp"

#include <gtest/gtest.h>

using namespace sos3;

namespace {

PolyY Y() { return PolyY::y(); }
RatFunc X() { return toy::X(); }

const TildeModel& toy_model() {
    static const TildeModel m = build_tilde(toy::toy_Q());
    return m;
}

const TildeData& instance_data() {
    static const FamilyInstance inst = build_family({Rational(23), Rational(34), Rational(547)});
    return instance_tilde(inst);
}

// (d, 8 d^3) lies on every tilde curve with Q monic cubic.
MumfordDivisor base_point(const TildeModel& m) {
    return mumford_validate(PolyY::linear(m.d), PolyY(RatFunc(8) * m.d.pow(3)), m.tilde_curve);
}

// Multiples of the base point plus the rational 2-torsion points.
std::vector<MumfordDivisor> small_group(const TildeModel& m, const std::vector<PolyY>& factors) {
    auto tors = two_torsion(m.tilde_curve, factors, {false, false, true});
    std::vector<MumfordDivisor> out;
    MumfordDivisor T = base_point(m), acc = identity(m.tilde_curve);
    for (int k = 0; k < 8; ++k) {
        for (const auto& t : tors) out.push_back(cantor_add(acc, t));
        acc = cantor_add(acc, T);
    }
    return out;
}

std::vector<PolyY> toy_factors() {
    RatFunc B = X() + RatFunc(2), C = X(), d = toy_model().d;
    PolyY s = Y(), sp = s + PolyY(d), sm = s - PolyY(d);
    PolyY g2 = s * s + PolyY(RatFunc(2) * (RatFunc(1) + C) * (B - C)) * s + PolyY(d * d);
    PolyY g3 = (B - C).inverse() * (sp.pow(4) - (RatFunc(1) + C) * (sp * sp * sm * sm) + B * sm.pow(4));
    return {s, g2, g3};
}

} // namespace

TEST(TildeTest, ToyModel) {
    const auto& m = toy_model();
    EXPECT_EQ(m.d, RatFunc(2) * (RatFunc(1) - X()));
    EXPECT_EQ(m.g, 3);
    EXPECT_EQ(m.tilde_curve.genus(), 3);
    auto f = toy_factors();
    EXPECT_EQ(f[0] * f[1] * f[2], m.tilde_curve.f());
    EXPECT_TRUE(f[2].is_monic());
}

TEST(TildeTest, InstanceModel) {
    const auto& t = instance_data();
    EXPECT_EQ(t.model.tilde_curve.f().degree(), 7);
    EXPECT_EQ(t.model.d, t.d);
    EXPECT_EQ(t.g1 * t.g2 * t.g3, t.model.tilde_curve.f());
}

TEST(TildeTest, ReciprocalSymmetry) {
    // s^8 f(d^2/s) = d^8 f(s)
    for (const TildeModel* m : {&toy_model(), &instance_data().model}) {
        const PolyY& f = m->tilde_curve.f();
        EXPECT_EQ(reciprocal_scaled(f, 8, m->d * m->d), m->d.pow(8) * f);
    }
}

TEST(TildeTest, Errors) {
    PolyY T = Y();
    EXPECT_EQ(error_code([&] { build_tilde((T + PolyY(1)) * (T * T + T + PolyY(1))); }), Errc::d_zero);
    EXPECT_EQ(error_code([&] { build_tilde(T * T + PolyY(1)); }), Errc::even_degree);
    EXPECT_EQ(error_code([&] { build_tilde(RatFunc(2) * T.pow(3) + PolyY(1)); }), Errc::not_monic);
    EXPECT_EQ(error_code([&] { build_tilde((T - PolyY(X())).pow(2) * (T - PolyY(1))); }), Errc::not_squarefree);
}

TEST(OmegaTest, TwistedRemainderOfDoubleBasePoint) {
    const auto& t = instance_data();
    const RatFunc& d = t.d;
    PolyY v = RatFunc(16) * d * d * Y() - PolyY(RatFunc(8) * d.pow(3));
    PolyY u = PolyY::linear(d).pow(2);
    EXPECT_EQ(twisted_remainder(v, u, t.model), -v);
}

TEST(OmegaTest, ImageOfBasePoint) {
    const auto& m = toy_model();
    auto T = base_point(m);
    auto img = omega_image(T, m);
    // <s - d, 8d^3> maps to <s(s - d), -8 d^2 s>.
    EXPECT_EQ(img.u(), Y() * PolyY::linear(m.d));
    EXPECT_EQ(img.v(), RatFunc(-8) * m.d * m.d * Y());
    EXPECT_EQ(img.curve(), m.tilde_curve);
    EXPECT_EQ(error_code([&] { omega_image(mumford_validate(Y(), PolyY(), m.tilde_curve), m); }),
              Errc::u_vanishes_at_zero);
    auto other = toy::interpolation_curve();
    EXPECT_EQ(error_code([&] { omega_image(other.points[0], m); }), Errc::curve_mismatch);
}

TEST(OmegaTest, InvolutionAndHomomorphism) {
    const auto& m = toy_model();
    auto grp = small_group(m, toy_factors());
    for (std::size_t i = 0; i < grp.size(); ++i) {
        EXPECT_EQ(omega_class(omega_class(grp[i], m), m), grp[i]) << grp[i].str("s");
        const auto& other = grp[(i * 7 + 3) % grp.size()];
        EXPECT_EQ(omega_class(cantor_add(grp[i], other), m),
                  cantor_add(omega_class(grp[i], m), omega_class(other, m)));
    }
}

TEST(InvarianceTest, CriterionAgreesWithCantorOnToy) {
    const auto& m = toy_model();
    for (const auto& D : small_group(m, toy_factors()))
        EXPECT_EQ(is_sigma_invariant(D, m), invariance_by_cantor(D, m)) << D.str("s");
}

TEST(InvarianceTest, InstanceTorsion) {
    const auto& t = instance_data();
    auto T = base_point(t.model);
    for (long n = 0; n < 8; ++n) {
        auto D = scalar_mul(n, T);
        bool expect = n == 0 || n == 4;
        EXPECT_EQ(is_sigma_invariant(D, t.model), expect) << n;
        EXPECT_EQ(invariance_by_cantor(D, t.model), expect) << n;
    }
    EXPECT_TRUE(is_sigma_invariant(mumford_validate(t.g1, PolyY(), t.model.tilde_curve), t.model));
    EXPECT_TRUE(is_sigma_invariant(mumford_validate(t.g2, PolyY(), t.model.tilde_curve), t.model));
    EXPECT_EQ(error_code([&] { invariance_criterion(mumford_validate(t.g1, PolyY(), t.model.tilde_curve), t.model); }),
              Errc::u_vanishes_at_zero);
}

TEST(VarpiTest, InstanceValues) {
    const auto& t = instance_data();
    auto T = base_point(t.model);
    EXPECT_EQ(varpi_antineutral(T, t.model), Varpi::not_invariant);
    EXPECT_EQ(varpi_antineutral(scalar_mul(2, T), t.model), Varpi::not_invariant);
    EXPECT_EQ(varpi_antineutral(scalar_mul(4, T), t.model), Varpi::invariant_trivial);
    EXPECT_EQ(varpi_antineutral(identity(t.model.tilde_curve), t.model), Varpi::invariant_trivial);
    auto g2 = mumford_validate(t.g2, PolyY(), t.model.tilde_curve);
    EXPECT_EQ(varpi_antineutral(g2, t.model), Varpi::invariant_trivial);
    EXPECT_STREQ(varpi_name(Varpi::invariant_antineutral), "invariant-antineutral");
}

// Constant cubics Q with a rational point P on the tilde curve: the class
// A = P + omega(P) + <s, 0> is invariant of degree 2 and 2A has degree g.
TEST(VarpiTest, DegreeGInvariantClasses) {
    struct Case {
        std::vector<long> q; // coefficients of Q from the constant term up
        long s0, t0;
        Rational u0;
    };
    const Case cases[] = {{{4, -4, -4, 1}, -1, 48, Rational(-1521, 64)},
                          {{4, 4, -2, 1}, 1, 48, Rational(-225, 64)},
                          {{1, 2, -1, 1}, -1, 24, Rational(-33489, 256)}};
    for (const Case& k : cases) {
        std::vector<RatFunc> qc;
        for (long a : k.q) qc.push_back(RatFunc(a));
        TildeModel m = build_tilde(PolyY(qc));
        auto P = mumford_validate(PolyY::linear(RatFunc(k.s0)), PolyY(RatFunc(k.t0)), m.tilde_curve);
        auto O = mumford_validate(Y(), PolyY(), m.tilde_curve);
        auto A = cantor_add(cantor_add(P, omega_class(P, m)), O);
        EXPECT_EQ(A.u().degree(), 2);
        EXPECT_TRUE(is_sigma_invariant(A, m));
        EXPECT_EQ(varpi_antineutral(A, m), Varpi::invariant_trivial);
        auto D = scalar_mul(2, A);
        ASSERT_EQ(D.u().degree(), 3);
        EXPECT_EQ(D.u().coeff(0), RatFunc(k.u0));
        EXPECT_TRUE(is_sigma_invariant(D, m));
        EXPECT_TRUE(invariance_by_cantor(D, m));
        EXPECT_TRUE(invariance_criterion(D, m));
        EXPECT_EQ(varpi_antineutral(D, m), Varpi::invariant_not_antineutral);
        auto E = cantor_add(D, scalar_mul(2, base_point(m)));
        EXPECT_EQ(is_sigma_invariant(E, m), invariance_by_cantor(E, m));
    }
}
