#include "sos3/jacobian.hpp"

#include "sos3/error.hpp"

namespace sos3 {

MumfordDivisor reduce_unchecked(const Curve& c, PolyY u, PolyY v);

Curve new_curve(const PolyY& f) {
    if (!f.is_monic()) throw Error(Errc::not_monic, "curve polynomial must be monic");
    if (f.degree() % 2 == 0) throw Error(Errc::even_degree, "curve polynomial has degree " + std::to_string(f.degree()));
    if (!is_squarefree(f)) throw Error(Errc::not_squarefree, "curve polynomial has a repeated factor");
    Curve c;
    c.data_ = std::make_shared<const Curve::Data>(Curve::Data{f, content_hash(f)});
    return c;
}

std::string MumfordDivisor::str(std::string_view var, std::string_view xvar) const {
    if (is_identity()) return "id";
    return "<" + u_.str(var, xvar) + " ; " + v_.str(var, xvar) + ">";
}

MumfordDivisor identity(const Curve& c) { return MumfordDivisor(c, PolyY(1), PolyY()); }

MumfordDivisor mumford_validate(const PolyY& u, const PolyY& v, const Curve& c) {
    if (!u.is_monic()) throw Error(Errc::u_not_monic, "u must be monic");
    if (v.degree() >= u.degree()) throw Error(Errc::deg_violation, "deg v must be below deg u");
    if (!rem(v * v - c.f(), u).is_zero()) throw Error(Errc::u_does_not_divide, "u does not divide v^2 - f");
    return MumfordDivisor(c, u, v);
}

MumfordDivisor reduce_unchecked(const Curve& c, PolyY u, PolyY v) {
    int g = c.genus();
    v = rem(v, u);
    while (u.degree() > g) {
        PolyY nu = exact_div(c.f() - v * v, u).monic();
        v = rem(-v, nu);
        u = std::move(nu);
    }
    return MumfordDivisor(c, std::move(u), std::move(v));
}

MumfordDivisor reduce(const MumfordDivisor& d) { return reduce_unchecked(d.curve(), d.u(), d.v()); }

MumfordDivisor cantor_add(const MumfordDivisor& a, const MumfordDivisor& b) {
    if (a.curve() != b.curve()) throw Error(Errc::curve_mismatch, "divisors live on different curves");
    if (a.is_identity()) return reduce(b);
    if (b.is_identity()) return reduce(a);
    const Curve& c = a.curve();
    const PolyY &u1 = a.u(), &u2 = b.u(), &v1 = a.v(), &v2 = b.v();
    auto e = xgcd(u1, u2);
    PolyY u, v;
    if (e.g.degree() == 0) {
        u = u1 * u2;
        v = rem(e.s * u1 * v2 + e.t * u2 * v1, u);
    } else {
        auto h = xgcd(e.g, v1 + v2);
        PolyY s1 = h.s * e.s, s2 = h.s * e.t, s3 = h.t;
        u = exact_div(u1 * u2, h.g * h.g);
        PolyY num = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + c.f());
        v = rem(exact_div(num, h.g), u);
    }
    return reduce_unchecked(c, std::move(u), std::move(v));
}

MumfordDivisor negate(const MumfordDivisor& d) { return reduce_unchecked(d.curve(), d.u(), -d.v()); }

MumfordDivisor scalar_mul(long n, const MumfordDivisor& d) {
    MumfordDivisor base = n < 0 ? negate(d) : reduce(d);
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    MumfordDivisor acc = identity(d.curve());
    while (k) {
        if (k & 1) acc = cantor_add(acc, base);
        k >>= 1;
        if (k) base = cantor_add(base, base);
    }
    return acc;
}

bool irreducible_by_degree(const PolyY& p) {
    if (p.degree() == 1) return true;
    if (p.degree() != 2) return false;
    RatFunc disc = p.coeff(1) * p.coeff(1) - RatFunc(4) * p.coeff(2) * p.coeff(0);
    return !is_square(disc);
}

std::vector<MumfordDivisor> two_torsion(const Curve& c, const std::vector<PolyY>& factors,
                                        const std::vector<bool>& certified) {
    PolyY prod(1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const PolyY& p = factors[i];
        if (!p.is_monic() || p.degree() < 1) throw Error(Errc::bad_factorization, "factor not monic of positive degree");
        bool vouched = i < certified.size() && certified[i];
        if (!vouched && !irreducible_by_degree(p))
            throw Error(Errc::bad_factorization, "irreducibility of factor " + std::to_string(i + 1) + " not certified");
        for (std::size_t j = 0; j < i; ++j)
            if (gcd(p, factors[j]).degree() > 0) throw Error(Errc::bad_factorization, "factors not coprime");
        prod = prod * p;
    }
    if (prod != c.f()) throw Error(Errc::bad_factorization, "product of factors differs from f");
    std::vector<MumfordDivisor> out;
    std::size_t k = factors.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        PolyY u(1);
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) u = u * factors[i];
        if (u.degree() <= c.genus()) out.push_back(mumford_validate(u, PolyY(), c));
    }
    return out;
}

} // namespace sos3
