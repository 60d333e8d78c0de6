#include "sos3/family.hpp"

#include "sos3/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace sos3 {

namespace {

Rational qabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational qpow(const Rational& q, unsigned n) {
    Rational r = 1;
    for (unsigned i = 0; i < n; ++i) r *= q;
    return r;
}

std::string qs(const Rational& q) { return to_string(q); }

Check make_check(std::string id, std::string statement, bool pass, std::string witness) {
    return Check{std::move(id), std::move(statement), pass, std::move(witness)};
}

Check sign_check(std::string id, std::string statement, const Rational& value, bool pass) {
    return make_check(std::move(id), std::move(statement), pass, "value = " + qs(value));
}

// Positive on the real line: no real root and positive at 0.
Check positive_on_R(std::string id, std::string name, const Poly& p) {
    std::size_t roots = p.is_zero() ? 0 : count_distinct_real_roots(p);
    Rational at0 = p.eval(0);
    bool pass = !p.is_zero() && roots == 0 && at0 > 0;
    return make_check(std::move(id), name + " > 0 on R", pass,
                      "real roots: " + std::to_string(roots) + "; value at 0: " + qs(at0));
}

RatFunc at_x2(const Poly& p) { return RatFunc(p.inflate(2)); }

} // namespace

FamilyInstance build_family(const FamilyParams& p) {
    Rational k = p.omega * p.omega - p.eta * p.eta;
    if (k == 0) throw Error(Errc::parameter_degeneracy, "|omega| = |eta|");
    FamilyInstance inst;
    inst.params = p;
    inst.b1 = (p.rho * p.rho - p.eta * p.eta) / k - k / 4;
    Poly xb = Poly::x() + Poly(inst.b1);
    inst.B = xb * xb - Poly(p.eta * p.eta);
    inst.C = Rational(2) * xb + Poly(k - 1);

    RatFunc B2 = at_x2(inst.B), C2 = at_x2(inst.C), one(1);
    PolyY y = PolyY::y(), y2 = y * y;
    inst.P_factors = {y2 + PolyY(1), y2 + PolyY(C2), y2 * y2 + (one + C2) * y2 + PolyY(B2)};
    inst.Q = (y + PolyY(C2)) * (y2 + (one + C2) * y + PolyY(B2));
    inst.tilde_cache = std::make_shared<TildeCache>();
    return inst;
}

struct TildeCache {
    std::once_flag once;
    std::optional<TildeData> data;
    std::exception_ptr error;
};

const TildeData& instance_tilde(const FamilyInstance& inst) {
    TildeCache& cache = *inst.tilde_cache;
    std::call_once(cache.once, [&] {
        try {
            RatFunc B2 = at_x2(inst.B), C2 = at_x2(inst.C), one(1);
            TildeData t{build_tilde(inst.Q), (one - C2) * (B2 - C2), {}, {}, {}};
            const RatFunc& d = t.d;
            PolyY y = PolyY::y(), y2 = y * y;
            PolyY sp = y + PolyY(d), sm = y - PolyY(d);
            PolyY sp2 = sp * sp, sm2 = sm * sm;
            t.g1 = y;
            t.g2 = y2 + (RatFunc(2) * (one + C2) * (B2 - C2)) * y + PolyY(d * d);
            t.g3 = (B2 - C2).inverse() * (sp2 * sp2 - (one + C2) * (sp2 * sm2) + B2 * (sm2 * sm2));
            cache.data = std::move(t);
        } catch (...) {
            cache.error = std::current_exception();
        }
    });
    if (cache.error) std::rethrow_exception(cache.error);
    return *cache.data;
}

std::vector<Check> check_positivity(const FamilyInstance& inst) {
    const auto& p = inst.params;
    Rational k = p.omega * p.omega - p.eta * p.eta;
    std::vector<Check> out;
    Rational w1 = p.omega - 1 - qabs(p.eta);
    out.push_back(sign_check("pos.ineq1", "omega > 1 + |eta|  (omega - 1 - |eta|)", w1, w1 > 0));
    Rational w2 = k - 2 * p.omega;
    out.push_back(sign_check("pos.ineq2", "omega^2 - eta^2 > 2 omega  (omega^2 - eta^2 - 2 omega)", w2, w2 > 0));
    Rational w3 = inst.b1 - 1 - k / 2;
    out.push_back(sign_check("pos.ineq3", "b1 > 1 + (omega^2 - eta^2)/2  (b1 - 1 - (omega^2 - eta^2)/2)", w3, w3 > 0));
    out.push_back(positive_on_R("pos.real.B", "B(x^2)", inst.B.inflate(2)));
    out.push_back(positive_on_R("pos.real.C", "C(x^2)", inst.C.inflate(2)));
    out.push_back(positive_on_R("pos.real.one_plus_C", "1 + C(x^2)", (Poly(1) + inst.C).inflate(2)));
    return out;
}

std::vector<Check> check_nonvanishing(const FamilyInstance& inst) {
    const auto& p = inst.params;
    const Rational &e = p.eta, &w = p.omega;
    Rational k = w * w - e * e;
    std::vector<Check> out;
    auto nz = [&](std::string id, std::string statement, const Rational& v) {
        out.push_back(sign_check(std::move(id), std::move(statement) + " != 0", v, v != 0));
    };
    nz("nz.1.eta", "eta", e);
    nz("nz.1.rho", "rho", p.rho);
    nz("nz.2.minus", "omega^2 - eta^2 - 2 - 2 eta", k - 2 - 2 * e);
    nz("nz.2.plus", "omega^2 - eta^2 - 2 + 2 eta", k - 2 + 2 * e);
    nz("nz.3", "(omega^2 - eta^2 - 2)^2 - 4 eta^2 - 4", (k - 2) * (k - 2) - 4 * e * e - 4);
    nz("nz.4.minus", "omega^2 - eta^2 - 1 - 2 eta", k - 1 - 2 * e);
    nz("nz.4.plus", "omega^2 - eta^2 - 1 + 2 eta", k - 1 + 2 * e);
    nz("nz.5", "(omega^2 - eta^2 - 1)^2 - 4 eta^2 - 1", (k - 1) * (k - 1) - 4 * e * e - 1);
    nz("nz.6.minus", "omega^2 - eta^2 - 2 eta", k - 2 * e);
    nz("nz.6.plus", "omega^2 - eta^2 + 2 eta", k + 2 * e);
    return out;
}

std::vector<NonsquareItem> nonsquare_items(const FamilyParams& p, const Rational& b1) {
    const Rational &e = p.eta, &w = p.omega;
    Rational k = w * w - e * e;
    Rational t = 2 * b1 - 2 + k;
    Rational a = k * k - 4 * w * w;
    Rational bm = (b1 - 1) * (b1 - 1) - w * w;
    Rational wm = (w - 1) * (w - 1) - e * e, wp = (w + 1) * (w + 1) - e * e;
    std::vector<NonsquareItem> out;
    auto add = [&](std::string label, std::string expr, const Rational& v) {
        out.push_back(NonsquareItem{std::move(label), std::move(expr), v});
    };
    // k = omega^2 - eta^2, t = 2 b1 - 2 + k
    add("a", "k^2 - 4 omega^2", a);
    add("b", "t (k - 2 omega)", t * (k - 2 * w));
    add("c", "t (k + 2 omega)", t * (k + 2 * w));
    add("d_sup", "2 (k - 2 omega)(b1 - 1 - omega)", 2 * (k - 2 * w) * (b1 - 1 - w));
    add("e_sup", "2 (k + 2 omega)(b1 - 1 + omega)", 2 * (k + 2 * w) * (b1 - 1 + w));
    add("d", "2 t (b1 - 1 + omega)", 2 * t * (b1 - 1 + w));
    add("e", "2 t (b1 - 1 - omega)", 2 * t * (b1 - 1 - w));
    add("f", "((b1 - 1)^2 - omega^2)(k^2 - 4 omega^2)", bm * a);
    for (unsigned n = 0; n <= 1; ++n) {
        std::string sn = std::to_string(n);
        add("g.n" + sn, "2 k (k - 2 omega)((omega + 1)^2 - eta^2)^" + sn, 2 * k * (k - 2 * w) * qpow(wp, n));
        add("h.n" + sn, "2 k (k + 2 omega)((omega - 1)^2 - eta^2)^" + sn, 2 * k * (k + 2 * w) * qpow(wm, n));
    }
    for (unsigned m = 1; m < 8; ++m) {
        unsigned n1 = m >> 2 & 1, n2 = m >> 1 & 1, n3 = m & 1;
        std::string tag = std::to_string(n1) + std::to_string(n2) + std::to_string(n3);
        add("i." + tag,
            "((b1 - 1)^2 - omega^2)^" + std::to_string(n1) + " ((omega - 1)^2 - eta^2)^" + std::to_string(n2) +
                " ((omega + 1)^2 - eta^2)^" + std::to_string(n3),
            qpow(bm, n1) * qpow(wm, n2) * qpow(wp, n3));
    }
    add("j", "2 k t", 2 * k * t);
    for (unsigned n1 = 0; n1 <= 1; ++n1) {
        for (unsigned n2 = 0; n2 <= 1; ++n2) {
            std::string tag = std::to_string(n1) + std::to_string(n2);
            Rational tail = qpow(w - 1 - e, 1 - n2) * qpow(w - 1 + e, n2);
            add("k." + tag,
                "2^n1 (k + 2 omega)(b1 - 1 + omega) k^n1 t^(1-n1) (omega - 1 - eta)^(1-n2) (omega - 1 + eta)^n2",
                qpow(2, n1) * (k + 2 * w) * (b1 - 1 + w) * qpow(k, n1) * qpow(t, 1 - n1) * tail);
            add("l." + tag, "2^(1-n1) (k + 2 omega) k^n1 t^n1 (omega - 1 - eta)^(1-n2) (omega - 1 + eta)^n2",
                qpow(2, 1 - n1) * (k + 2 * w) * qpow(k, n1) * qpow(t, n1) * tail);
        }
    }
    add("m", "b1^2 - eta^2", b1 * b1 - e * e);
    add("n", "2 b1 + k - 1", 2 * b1 + k - 1);
    return out;
}

std::vector<Check> check_nonsquares(const FamilyInstance& inst) {
    std::vector<Check> out;
    for (const auto& it : nonsquare_items(inst.params, inst.b1)) {
        out.push_back(make_check("sq." + it.label, it.expression + " is not a square in Q", !rational_is_square(it.value),
                                 "value = " + qs(it.value)));
    }
    return out;
}

std::vector<Check> torsion_nonsquare_checks(const Poly& B, const Poly& C) {
    std::vector<Check> out;
    Poly one(1);
    std::vector<std::pair<std::string, std::pair<std::string, Poly>>> items = {
        {"B", {"B", B}},
        {"C", {"C", C}},
        {"disc", {"(1 + C)^2 - 4 B", (one + C) * (one + C) - Rational(4) * B}},
        {"BmC", {"B - C", B - C}},
        {"C_BmC", {"C (B - C)", C * (B - C)}},
        {"omC_BmC", {"(1 - C)(B - C)", (one - C) * (B - C)}},
    };
    for (auto& [tag, item] : items) {
        const Poly& p = item.second;
        bool pass = !p.is_zero() && !is_perfect_square_poly(p, SquareMode::over_C);
        out.push_back(make_check("tors.nonsquare." + tag, item.first + " is not a square in C(x)", pass,
                                 "polynomial = " + p.str()));
    }
    return out;
}

std::vector<Check> torsion_certificate(const FamilyInstance& inst) {
    std::vector<Check> out = torsion_nonsquare_checks(inst.B.inflate(2), inst.C.inflate(2));
    const TildeData* td = nullptr;
    try {
        td = &instance_tilde(inst);
    } catch (const Error& e) {
        out.push_back(make_check("tors.model", "genus-3 model y^2 = g1 g2 g3 exists", false,
                                 std::string(errc_name(e.code())) + ": " + e.what()));
        return out;
    }
    const TildeModel& m = td->model;
    const Curve& c = m.tilde_curve;
    const RatFunc& d = td->d;
    PolyY s = PolyY::y();
    bool fprod = td->g1 * td->g2 * td->g3 == c.f();
    out.push_back(make_check("tors.model", "genus-3 model y^2 = f with f = g1 g2 g3 and d = -Q(-1)", fprod && m.d == d,
                             "genus " + std::to_string(c.genus()) + "; d = " + d.str()));

    RatFunc g2disc = td->g2.coeff(1) * td->g2.coeff(1) - RatFunc(4) * td->g2.coeff(0);
    bool g2irr = irreducible_by_degree(td->g2);
    out.push_back(make_check("tors.two_torsion", "<g1,0>, <g2,0>, <g1 g2,0> are 2-torsion points, g2 irreducible",
                             g2irr && fprod, "disc(g2) = " + g2disc.str()));

    auto divisor = [&](const PolyY& u, const PolyY& v) -> std::optional<MumfordDivisor> {
        try {
            return mumford_validate(u, v, c);
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    auto T = divisor(PolyY::linear(d), PolyY(RatFunc(8) * d * d * d));
    if (!T) {
        out.push_back(make_check("tors.T", "<s - d ; 8 d^3> lies on the model", false, "validation failed"));
        return out;
    }
    out.push_back(make_check("tors.T", "<s - d ; 8 d^3> lies on the model", true, T->str("s")));
    MumfordDivisor T2 = cantor_add(*T, *T);
    PolyY sm = s - PolyY(d);
    PolyY e2u = sm * sm, e2v = RatFunc(16) * d * d * s - PolyY(RatFunc(8) * d * d * d);
    out.push_back(make_check("tors.double", "[2]T = <(s - d)^2 ; 16 d^2 s - 8 d^3>", T2.u() == e2u && T2.v() == e2v,
                             T2.str("s")));
    MumfordDivisor T4 = cantor_add(T2, T2);
    out.push_back(make_check("tors.quadruple", "[4]T = <g1 g2 ; 0>", T4.u() == td->g1 * td->g2 && T4.v().is_zero(),
                             T4.str("s")));
    MumfordDivisor T8 = cantor_add(T4, T4);
    out.push_back(make_check("tors.order", "[8]T = id", T8.is_identity(), T8.str("s")));

    auto G1 = mumford_validate(td->g1, PolyY(), c);
    auto G2 = mumford_validate(td->g2, PolyY(), c);
    auto G12 = mumford_validate(td->g1 * td->g2, PolyY(), c);
    bool i1 = is_sigma_invariant(G1, m), i2 = is_sigma_invariant(G2, m), i2T = is_sigma_invariant(T2, m);
    out.push_back(make_check("tors.inv.g1", "<g1 ; 0> is invariant", i1, i1 ? "invariant" : "not invariant"));
    out.push_back(make_check("tors.inv.g2", "<g2 ; 0> is invariant", i2, i2 ? "invariant" : "not invariant"));
    out.push_back(make_check("tors.inv.double", "[2]T is not invariant", !i2T, i2T ? "invariant" : "not invariant"));

    // Full 2-primary torsion n1 <g1,0> + n2 T: criterion against the Cantor route.
    std::vector<MumfordDivisor> multiples{identity(c)};
    for (int i = 1; i < 8; ++i) multiples.push_back(cantor_add(multiples.back(), *T));
    std::string agree_w, inv_w;
    bool agree = true, inv_ok = true;
    int antineutral = 0;
    std::string varpi_w;
    for (int n1 = 0; n1 <= 1; ++n1) {
        for (int n2 = 0; n2 < 8; ++n2) {
            MumfordDivisor D = n1 ? cantor_add(G1, multiples[n2]) : multiples[n2];
            bool fast = is_sigma_invariant(D, m);
            bool slow = invariance_by_cantor(D, m);
            std::string tag = std::to_string(n1) + "g1+" + std::to_string(n2) + "T";
            if (fast != slow) {
                agree = false;
                agree_w += tag + " ";
            }
            bool expect = n2 % 4 == 0;
            if (fast != expect) inv_ok = false;
            if (fast) {
                inv_w += (inv_w.empty() ? "" : ", ") + tag;
                Varpi vv = varpi_antineutral(D, m);
                if (vv == Varpi::invariant_antineutral) ++antineutral;
                varpi_w += (varpi_w.empty() ? "" : ", ") + tag + ": " + varpi_name(vv);
            }
        }
    }
    out.push_back(make_check("tors.inv.routes", "closed-form invariance agrees with the Cantor route on 16 points", agree,
                             agree ? "16/16 agree" : "disagree at " + agree_w));
    out.push_back(make_check("tors.inv.span", "invariant 2-primary points are exactly id, <g1,0>, <g2,0>, <g1 g2,0>",
                             inv_ok, inv_w));
    bool span_ok = G12 == cantor_add(G1, G2) && T4 == G12;
    out.push_back(make_check("tors.varpi", "no invariant 2-primary torsion point is antineutral",
                             antineutral == 0 && span_ok, varpi_w));
    return out;
}

} // namespace sos3
