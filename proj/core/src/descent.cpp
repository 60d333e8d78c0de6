#include "sos3/descent.hpp"

#include "sos3/error.hpp"

namespace sos3 {

SchaeferContext SchaeferContext::make(const Curve& c, std::vector<PolyY> factors, std::vector<bool> certified) {
    // two_torsion performs the factorization checks.
    two_torsion(c, factors, certified);
    certified.resize(factors.size(), false);
    return SchaeferContext(c, std::move(factors), std::move(certified));
}

bool ClassTuple::norm_trivial() const {
    SquareClass p;
    for (const auto& c : components) p = p * c;
    return p.is_trivial();
}

std::string ClassTuple::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out += ", ";
        out += "[" + components[i].str() + "]";
    }
    return out + ")";
}

ClassTuple operator*(const ClassTuple& a, const ClassTuple& b) {
    if (a.components.size() != b.components.size()) throw Error(Errc::curve_mismatch, "tuples of different length");
    ClassTuple r;
    for (std::size_t i = 0; i < a.components.size(); ++i) r.components.push_back(a.components[i] * b.components[i]);
    return r;
}

namespace {

RatFunc signed_resultant(const PolyY& fi, const PolyY& u) {
    RatFunc r = resultant(fi, u);
    if ((fi.degree() * u.degree()) % 2) r = -r;
    return r;
}

ClassTuple coprime_image(const PolyY& u, const std::vector<PolyY>& fs) {
    ClassTuple t;
    for (const auto& fi : fs) t.components.push_back(square_class(signed_resultant(fi, u)));
    return t;
}

ClassTuple factor_image(std::size_t j, const std::vector<PolyY>& fs) {
    ClassTuple t;
    SquareClass rest;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i == j) {
            t.components.emplace_back();
            continue;
        }
        SquareClass c = square_class(signed_resultant(fs[i], fs[j]));
        rest = rest * c;
        t.components.push_back(c);
    }
    t.components[j] = rest;
    return t;
}

ClassTuple trivial_tuple(std::size_t k) { return ClassTuple{std::vector<SquareClass>(k)}; }

} // namespace

ClassTuple xi(const MumfordDivisor& D, const SchaeferContext& ctx) {
    if (D.curve() != ctx.curve()) throw Error(Errc::curve_mismatch, "divisor is not on the context curve");
    const auto& fs = ctx.factors();
    ClassTuple acc = trivial_tuple(fs.size());
    if (D.is_identity()) return acc;
    PolyY w = D.u();
    for (std::size_t j = 0; j < fs.size(); ++j) {
        int dg = gcd(w, fs[j]).degree();
        if (dg == 0) continue;
        if (dg != fs[j].degree()) throw Error(Errc::u_not_coprime, "u shares a proper factor with f_" + std::to_string(j + 1));
        w = exact_div(w, fs[j]);
        acc = acc * factor_image(j, fs);
    }
    if (w.degree() > 0) acc = acc * coprime_image(w, fs);
    return acc;
}

bool xi_is_2torsion_image(const ClassTuple& t, const SchaeferContext& ctx) {
    const auto& fs = ctx.factors();
    if (t.components.size() != fs.size()) return false;
    if (!t.norm_trivial()) return false;
    std::vector<ClassTuple> single;
    for (std::size_t j = 0; j < fs.size(); ++j) single.push_back(factor_image(j, fs));
    for (std::size_t mask = 0; mask < (std::size_t{1} << fs.size()); ++mask) {
        ClassTuple img = trivial_tuple(fs.size());
        for (std::size_t j = 0; j < fs.size(); ++j)
            if (mask >> j & 1) img = img * single[j];
        if (img == t) return true;
    }
    return false;
}

EllipticModel elliptic_dual(const EllipticModel& e) {
    RatFunc disc = e.S * e.S - RatFunc(4) * e.T;
    if (e.T.is_zero() || disc.is_zero()) throw Error(Errc::degenerate_curve, "T (S^2 - 4T) vanishes");
    return EllipticModel{RatFunc(-2) * e.S, disc};
}

SquareClass elliptic_gamma(const EllipticPoint& p, const EllipticModel& e) {
    if (p.kind == EllipticPoint::Kind::neutral) return SquareClass();
    RatFunc rhs = p.y * (p.y * p.y + e.S * p.y + e.T);
    if (p.z * p.z != rhs) throw Error(Errc::point_not_on_curve, "z^2 differs from y (y^2 + S y + T)");
    if (p.y.is_zero()) {
        if (e.T.is_zero()) throw Error(Errc::degenerate_curve, "T vanishes");
        return square_class(e.T);
    }
    return square_class(p.y);
}

PolyY RichelotDual::quintic() const { return delta.inverse() * (L1 * L2 * L3); }

PolyY richelot_bracket(const PolyY& p, const PolyY& q) { return p.derivative() * q - p * q.derivative(); }

RichelotDual richelot_dual(const PolyY& G1, const PolyY& G2, const PolyY& G3) {
    const PolyY* g[3] = {&G1, &G2, &G3};
    int total = 0;
    for (auto* p : g) {
        if (p->degree() > 2 || p->degree() < 0) throw Error(Errc::degree_violation, "each G_i must have degree at most 2");
        total += p->degree();
    }
    if (total != 5) throw Error(Errc::degree_violation, "G1 G2 G3 must have degree 5");
    auto m = [&](int i, int j) { return g[i]->coeff(j); };
    RatFunc delta = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                    m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                    m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    if (delta.is_zero()) throw Error(Errc::singular_delta, "coefficient determinant vanishes");
    return RichelotDual{delta, richelot_bracket(G2, G3), richelot_bracket(G3, G1), richelot_bracket(G1, G2)};
}

namespace {

Curve checked_curve(const std::string& name, const std::vector<PolyY>& factors) {
    PolyY f(1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!is_squarefree(factors[i]))
            throw Error(Errc::squarefree_violation, name + ": factor " + factors[i].str() + " has a repeated root");
        for (std::size_t j = 0; j < i; ++j)
            if (gcd(factors[i], factors[j]).degree() > 0)
                throw Error(Errc::squarefree_violation,
                            name + ": factors " + factors[j].str() + " and " + factors[i].str() + " share a root");
        f = f * factors[i];
    }
    return new_curve(f);
}

} // namespace

SplitFamily split_family(const RatFunc& B, const RatFunc& C, const RatFunc& delta) {
    if (delta.is_zero()) throw Error(Errc::squarefree_violation, "delta vanishes");
    const PolyY y = PolyY::y();
    const RatFunc one(1), two(2), four(4);
    RatFunc E = (one - C) / two;
    RatFunc Dq = ((one + C) * (one + C) - four * B) / four;
    RatFunc d2 = delta * delta;

    SplitFamily out{delta, Curve(), Curve(), Curve(), Curve(), {}, {}, {}, {}, {}};
    out.c_plus_factors = {PolyY::linear(-delta * (one - E)), PolyY::linear(delta * E), PolyY::linear(-delta * E),
                          y * y - PolyY(d2 * Dq)};
    out.c_plus_quadratics = {out.c_plus_factors[0], out.c_plus_factors[1] * out.c_plus_factors[2], out.c_plus_factors[3]};
    out.c_plus = checked_curve("C+", out.c_plus_factors);

    out.c_plus_hat_factors = {PolyY::linear(-delta * (one + C)), y * y - PolyY(four * d2 * B),
                              y * y - PolyY(four * d2 * C)};
    out.c_plus_hat = checked_curve("C+^", out.c_plus_hat_factors);

    RatFunc BmC = B - C, omc = one - C;
    out.c_minus_model = EllipticModel{-delta * (omc * omc - two * BmC), d2 * BmC * BmC};
    out.c_minus = checked_curve("C-", {y, y * y + out.c_minus_model.S * y + PolyY(out.c_minus_model.T)});

    PolyY r1 = PolyY::linear(-delta * omc * omc), r2 = PolyY::linear(-delta * (omc * omc - four * BmC));
    PolyY quad = r1 * r2;
    out.c_minus_hat_model = EllipticModel{quad.coeff(1), quad.coeff(0)};
    out.c_minus_hat = checked_curve("C-^", {y, r1, r2});
    return out;
}

RichelotMatch match_richelot(const SplitFamily& fam, const RatFunc& C) {
    RichelotDual rd = richelot_dual(fam.c_plus_quadratics[0], fam.c_plus_quadratics[1], fam.c_plus_quadratics[2]);
    RatFunc a = fam.delta * (RatFunc(1) + C) / RatFunc(2);
    PolyY phi = RatFunc(Rational(-1, 2)) * PolyY::y() - PolyY(a);
    PolyY h = rd.quintic().compose(phi);
    const PolyY& k = fam.c_plus_hat.f();
    RichelotMatch m;
    if (h.degree() != k.degree()) return m;
    m.scale = h.lc();
    m.matches = h == m.scale * k;
    m.scale_is_square = is_square(m.scale);
    return m;
}

} // namespace sos3
