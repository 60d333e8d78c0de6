#include "sos3/antineutral.hpp"

#include "sos3/error.hpp"

namespace sos3 {

TildeModel build_tilde(const PolyY& Q) {
    if (!Q.is_monic()) throw Error(Errc::not_monic, "Q must be monic");
    if (Q.degree() % 2 == 0) throw Error(Errc::even_degree, "Q must have odd degree");
    // Q(-1) = 0 also breaks squarefreeness; report the more specific cause.
    RatFunc d = -Q.eval(RatFunc(-1));
    if (d.is_zero()) throw Error(Errc::d_zero, "Q(-1) vanishes");
    PolyY y2 = PolyY::y() * PolyY::y();
    PolyY P = (y2 + PolyY(1)) * Q.compose(y2);
    if (!is_squarefree(P)) throw Error(Errc::not_squarefree, "(y^2+1) Q(y^2) has a repeated factor");

    int g = Q.degree();
    PolyY s = PolyY::y();
    PolyY sp = s + PolyY(d), sm = s - PolyY(d);
    PolyY sp2 = sp * sp, sm2 = sm * sm;
    PolyY sum;
    for (int i = 0; i <= g; ++i) {
        RatFunc q = Q.coeff(i);
        if (q.is_zero()) continue;
        if (i % 2) q = -q;
        sum += q * (sp2.pow(static_cast<unsigned>(i)) * sm2.pow(static_cast<unsigned>(g - i)));
    }
    PolyY f = (-d.inverse()) * (s * sum);
    return TildeModel{Q, d, new_curve(f), g};
}

namespace {

RatFunc at_zero(const PolyY& p) { return p.coeff(0); }

// s^(g+1) v(d^2/s) / d^(g+1)
PolyY tau_twist(const PolyY& v, const TildeModel& m) {
    RatFunc d2 = m.d * m.d;
    return m.d.pow(-(m.g + 1)) * reciprocal_scaled(v, static_cast<unsigned>(m.g + 1), d2);
}

struct Split {
    bool has_origin;
    MumfordDivisor rest;
};

Split split_origin(const MumfordDivisor& D) {
    if (D.is_identity() || !at_zero(D.u()).is_zero()) return {false, D};
    PolyY u0 = exact_div(D.u(), PolyY::y());
    return {true, mumford_validate(u0, rem(D.v(), u0), D.curve())};
}

MumfordDivisor origin_point(const Curve& c) { return mumford_validate(PolyY::y(), PolyY(), c); }

} // namespace

MumfordDivisor omega_image(const MumfordDivisor& D, const TildeModel& m) {
    if (D.curve() != m.tilde_curve) throw Error(Errc::curve_mismatch, "divisor is not on the tilde curve");
    if (D.is_identity()) return D;
    RatFunc u0 = at_zero(D.u());
    if (u0.is_zero()) throw Error(Errc::u_vanishes_at_zero, "u(0) = 0");
    int e = (D.u().degree() + 1) / 2;
    RatFunc d2 = m.d * m.d;
    PolyY nu = u0.inverse() * reciprocal_scaled(D.u(), static_cast<unsigned>(2 * e), d2);
    PolyY nv = tau_twist(D.v(), m);
    if (m.g % 2) nv = -nv;
    return mumford_validate(nu, rem(nv, nu), D.curve());
}

PolyY twisted_remainder(const PolyY& v, const PolyY& u, const TildeModel& m) { return rem(-tau_twist(v, m), u); }

MumfordDivisor omega_class(const MumfordDivisor& D, const TildeModel& m) {
    Split sp = split_origin(D);
    MumfordDivisor w = reduce(omega_image(sp.rest, m));
    if (sp.has_origin) w = cantor_add(w, origin_point(D.curve()));
    return w;
}

bool invariance_criterion(const MumfordDivisor& D, const TildeModel& m) {
    if (D.is_identity()) return true;
    const PolyY &u = D.u(), &v = D.v();
    RatFunc u0 = at_zero(u);
    if (u0.is_zero()) throw Error(Errc::u_vanishes_at_zero, "u(0) = 0");
    int deg = u.degree();
    RatFunc d2 = m.d * m.d;
    if (deg % 2 == 0) {
        if (reciprocal_scaled(u, static_cast<unsigned>(deg), d2) == u0 * u && twisted_remainder(v, u, m) == v)
            return true;
    }
    if (deg == m.g) {
        PolyY vc = v - (at_zero(v) / u0) * u;
        if (tau_twist(vc, m) == vc) {
            PolyY lhs = u0 * (m.tilde_curve.f() - vc * vc);
            PolyY rhs = PolyY::y() * u * reciprocal_scaled(u, static_cast<unsigned>(m.g), d2);
            if (lhs == rhs) return true;
        }
    }
    return false;
}

bool invariance_by_cantor(const MumfordDivisor& D, const TildeModel& m) {
    return cantor_add(omega_class(D, m), negate(D)).is_identity();
}

bool is_sigma_invariant(const MumfordDivisor& D, const TildeModel& m) {
    if (D.curve() != m.tilde_curve) throw Error(Errc::curve_mismatch, "divisor is not on the tilde curve");
    return invariance_criterion(split_origin(D).rest, m);
}

const char* varpi_name(Varpi v) {
    switch (v) {
    case Varpi::not_invariant: return "not-invariant";
    case Varpi::invariant_trivial: return "invariant-trivial";
    case Varpi::invariant_antineutral: return "invariant-antineutral";
    case Varpi::invariant_not_antineutral: return "invariant-not-antineutral";
    }
    return "?";
}

Varpi varpi_antineutral(const MumfordDivisor& D, const TildeModel& m) {
    if (!is_sigma_invariant(D, m)) return Varpi::not_invariant;
    RatFunc u0 = at_zero(D.u());
    // Zero at the origin: the image plus div(s^e) is already reduced, so the
    // antineutral test is never reached.
    if (D.u().degree() < m.g || u0.is_zero()) return Varpi::invariant_trivial;
    return is_psd(u0) ? Varpi::invariant_antineutral : Varpi::invariant_not_antineutral;
}

} // namespace sos3
