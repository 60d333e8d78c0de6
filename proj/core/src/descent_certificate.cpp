#include "sos3/family.hpp"

#include "sos3/error.hpp"

#include <map>

namespace sos3 {

namespace {

struct Gate {
    std::string id;
    std::string statement;
    std::vector<std::pair<std::string, bool>> conditions;

    void require(std::string what, bool ok) { conditions.emplace_back(std::move(what), ok); }

    Check finish() const {
        bool pass = true;
        std::string w;
        for (const auto& [what, ok] : conditions) {
            pass = pass && ok;
            w += (w.empty() ? "" : "; ") + what + (ok ? ": ok" : ": FAILED");
        }
        return Check{id, statement, pass, w};
    }
};

Rational qabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::string class_list(const std::vector<SquareClass>& cs) {
    std::string out;
    for (const auto& c : cs) out += (out.empty() ? "[" : ", [") + c.str() + "]";
    return out;
}

std::string delta_tag(const RatFunc& delta) { return delta.is_one() ? "one" : "x"; }

// Checks built on the split curves for one twist delta.
void twist_checks(const Poly& B, const Poly& C, const RatFunc& delta, std::vector<Check>& out) {
    std::string tag = delta_tag(delta);
    std::string dn = delta.str();
    std::optional<SplitFamily> fam;
    try {
        fam = split_family(RatFunc(B), RatFunc(C), delta);
    } catch (const Error& e) {
        out.push_back(Check{"desc.curves." + tag, "the four split curves are squarefree for delta = " + dn, false,
                            std::string(errc_name(e.code())) + ": " + e.what()});
        return;
    }
    out.push_back(Check{"desc.curves." + tag, "the four split curves are squarefree for delta = " + dn, true,
                        "genus " + std::to_string(fam->c_plus.genus()) + ", " + std::to_string(fam->c_plus_hat.genus()) +
                            ", " + std::to_string(fam->c_minus.genus()) + ", " +
                            std::to_string(fam->c_minus_hat.genus())});

    const RatFunc one(1), Br(B), Cr(C);
    const RatFunc E = (one - Cr) / RatFunc(2);
    const RatFunc Dq = ((one + Cr) * (one + Cr) - RatFunc(4) * Br) / RatFunc(4);

    // Elliptic pair: the hat curve is the dual, and 2-torsion images.
    {
        EllipticModel dual = elliptic_dual(fam->c_minus_model);
        EllipticModel dd = elliptic_dual(dual);
        bool ok = dual.S == fam->c_minus_hat_model.S && dual.T == fam->c_minus_hat_model.T &&
                  dd.S == RatFunc(4) * fam->c_minus_model.S && dd.T == RatFunc(16) * fam->c_minus_model.T;
        out.push_back(Check{"desc.cminus.dual." + tag, "C-^ is the 2-isogenous dual of C-, and the double dual is (4S, 16T)",
                            ok, "S^ = " + dual.S.str() + "; T^ = " + dual.T.str()});

        SquareClass g0 = elliptic_gamma(EllipticPoint::at(RatFunc(0), RatFunc(0)), fam->c_minus_model);
        out.push_back(Check{"desc.cminus.gamma." + tag, "gamma of the 2-torsion point (0,0) on C- is trivial",
                            g0.is_trivial(), "[" + g0.str() + "]"});

        SquareClass h0 = elliptic_gamma(EllipticPoint::at(RatFunc(0), RatFunc(0)), fam->c_minus_hat_model);
        RatFunc r = -delta * (one - Cr) * (one - Cr);
        SquareClass h1 = elliptic_gamma(EllipticPoint::at(r, RatFunc(0)), fam->c_minus_hat_model);
        bool okh = h0 == square_class((one + Cr) * (one + Cr) - RatFunc(4) * Br) && h1 == square_class(-delta);
        out.push_back(Check{"desc.cminushat.gamma." + tag,
                            "gamma on the 2-torsion of C-^ gives [(1+C)^2 - 4B] and [-delta]", okh,
                            class_list({h0, h1})});
    }

    // Plus curve: Schaefer images of the 2-torsion against the closed forms.
    try {
        auto ctx = SchaeferContext::make(fam->c_plus, fam->c_plus_factors);
        const Curve& c = fam->c_plus;
        const PolyY& f2 = fam->c_plus_factors[1];
        PolyY f23 = fam->c_plus_factors[1] * fam->c_plus_factors[2];
        const PolyY& f4 = fam->c_plus_factors[3];
        RatFunc e2d = E * E - Dq, om2e = one - RatFunc(2) * E, ome2d = (one - E) * (one - E) - Dq;
        std::vector<std::pair<std::string, std::pair<ClassTuple, ClassTuple>>> rows;
        auto tuple = [](std::vector<RatFunc> v) {
            ClassTuple t;
            for (const auto& r : v) t.components.push_back(square_class(r));
            return t;
        };
        rows.push_back({"<y - delta E ; 0>",
                        {xi(mumford_validate(f2, PolyY(), c), ctx),
                         tuple({delta, RatFunc(2) * E * e2d, RatFunc(2) * delta * E, e2d})}});
        rows.push_back({"<y^2 - delta^2 E^2 ; 0>",
                        {xi(mumford_validate(f23, PolyY(), c), ctx),
                         tuple({om2e, -delta * e2d, -delta * om2e * e2d, one})}});
        rows.push_back({"<y^2 - delta^2 D ; 0>",
                        {xi(mumford_validate(f4, PolyY(), c), ctx), tuple({ome2d, e2d, e2d, ome2d})}});
        bool ok = true, kernel = true;
        std::string w;
        for (const auto& [name, pr] : rows) {
            ok = ok && pr.first == pr.second;
            kernel = kernel && pr.first.norm_trivial();
            w += (w.empty() ? "" : "; ") + name + " -> " + pr.first.str();
        }
        out.push_back(Check{"desc.cplus.xi." + tag, "Xi of the 2-torsion of C+ matches the closed-form tuples", ok, w});
        out.push_back(Check{"desc.cplus.norm." + tag, "Xi images of the 2-torsion of C+ have trivial norm", kernel,
                            kernel ? "product of components is a square" : "nontrivial product"});
    } catch (const Error& e) {
        out.push_back(Check{"desc.cplus.xi." + tag, "Xi of the 2-torsion of C+ matches the closed-form tuples", false,
                            std::string(errc_name(e.code())) + ": " + e.what()});
    }

    try {
        auto ctx = SchaeferContext::make(fam->c_plus_hat, fam->c_plus_hat_factors);
        std::string w;
        bool kernel = true;
        for (const auto& t : two_torsion(fam->c_plus_hat, fam->c_plus_hat_factors)) {
            if (t.is_identity()) continue;
            ClassTuple img = xi(t, ctx);
            kernel = kernel && img.norm_trivial() && xi_is_2torsion_image(img, ctx);
            w += (w.empty() ? "" : "; ") + t.str() + " -> " + img.str();
        }
        out.push_back(Check{"desc.cplushat.xi." + tag, "Xi images of the 2-torsion of C+^ are norm-trivial", kernel, w});
    } catch (const Error& e) {
        out.push_back(Check{"desc.cplushat.xi." + tag, "Xi images of the 2-torsion of C+^ are norm-trivial", false,
                            std::string(errc_name(e.code())) + ": " + e.what()});
    }

    try {
        RichelotMatch rm = match_richelot(*fam, Cr);
        out.push_back(Check{"desc.richelot." + tag,
                            "Richelot dual of C+ equals C+^ under y -> -y/2 - delta(1+C)/2 up to a square constant",
                            rm.matches && rm.scale_is_square, "scale = " + rm.scale.str()});
    } catch (const Error& e) {
        out.push_back(Check{"desc.richelot." + tag, "Richelot dual of C+ equals C+^ up to a square constant", false,
                            std::string(errc_name(e.code())) + ": " + e.what()});
    }
}

} // namespace

std::vector<Check> descent_certificate(const FamilyInstance& inst, const std::vector<Check>& prior) {
    std::map<std::string, bool> passed;
    for (const auto& c : prior) passed[c.id] = c.pass;
    auto ok = [&](const std::string& id) {
        auto it = passed.find(id);
        return it != passed.end() && it->second;
    };

    const auto& p = inst.params;
    const Rational &e = p.eta, &w = p.omega;
    Rational k = w * w - e * e;
    Rational aw = qabs(w);
    std::vector<Check> out;

    Gate g1{"desc.hyp.cminus.one", "hypotheses for the elliptic curve C- with a constant twist", {}};
    g1.require("omega^2 > eta^2", k > 0);
    g1.require("sq.a", ok("sq.a"));
    out.push_back(g1.finish());

    Gate g2{"desc.hyp.cminus.x", "hypotheses for the elliptic curve C- twisted by x", {}};
    g2.require("omega^2 - eta^2 > 2|omega|", k > 2 * aw);
    for (const char* id : {"sq.b", "sq.c", "sq.d_sup", "sq.e_sup", "sq.i.100"}) g2.require(id, ok(id));
    out.push_back(g2.finish());

    Gate g3{"desc.hyp.cminushat.one", "hypotheses for the dual curve C-^ with a constant twist", {}};
    g3.require("(omega^2 - eta^2)^2 - 4 omega^2 > 0", k * k - 4 * w * w > 0);
    out.push_back(g3.finish());

    Gate g4{"desc.hyp.cminushat.x", "hypotheses for the dual curve C-^ twisted by x", {}};
    g4.require("rho != 0", p.rho != 0);
    for (const char* id : {"sq.a", "sq.d", "sq.e", "sq.f", "sq.i.100"}) g4.require(id, ok(id));
    out.push_back(g4.finish());

    Gate g5{"desc.hyp.cplus.one", "hypotheses for the genus-2 curve C+ with a constant twist", {}};
    g5.require("|omega| > 1 + |eta|", aw > 1 + qabs(e));
    g5.require("omega^2 - eta^2 > 2|omega|", k > 2 * aw);
    for (const char* id : {"nz.2.minus", "nz.2.plus", "nz.4.minus", "nz.4.plus", "sq.g.n0", "sq.g.n1", "sq.h.n0",
                           "sq.h.n1", "sq.i.001", "sq.i.010", "sq.i.011"})
        g5.require(id, ok(id));
    out.push_back(g5.finish());

    Gate g6{"desc.hyp.cplus.x", "hypotheses for the genus-2 curve C+ twisted by x", {}};
    for (const char* id : {"pos.ineq1", "pos.ineq2", "pos.ineq3", "nz.2.minus", "nz.2.plus", "nz.4.minus",
                           "nz.4.plus", "sq.i.001", "sq.i.010", "sq.i.011", "sq.i.100", "sq.i.101", "sq.i.110",
                           "sq.i.111", "sq.j", "sq.k.00", "sq.k.01", "sq.k.10", "sq.k.11", "sq.l.00", "sq.l.01",
                           "sq.l.10", "sq.l.11"})
        g6.require(id, ok(id));
    out.push_back(g6.finish());

    Gate g7{"desc.hyp.cplushat", "hypotheses for the dual genus-2 curve C+^, both twists", {}};
    g7.require("(omega^2 - eta^2)^2 - 4 eta^2 != 0", k * k - 4 * e * e != 0);
    g7.require("B(0) - C(0) != 0", inst.B.eval(0) - inst.C.eval(0) != 0);
    g7.require("eta != 0", e != 0);
    for (const char* id : {"nz.2.minus", "nz.2.plus", "nz.3", "nz.4.minus", "nz.4.plus", "nz.5", "nz.6.minus",
                           "nz.6.plus", "sq.a", "sq.i.010", "sq.i.001", "sq.m", "sq.n"})
        g7.require(id, ok(id));
    out.push_back(g7.finish());

    twist_checks(inst.B, inst.C, RatFunc(1), out);
    twist_checks(inst.B, inst.C, RatFunc(Poly::x()), out);
    return out;
}

} // namespace sos3
