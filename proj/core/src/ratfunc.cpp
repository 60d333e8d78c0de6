#include "sos3/ratfunc.hpp"

#include "sos3/error.hpp"

#include <algorithm>

namespace sos3 {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error(Errc::division_by_zero_polynomial, "RatFunc");
    if (num.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den.degree() == 0) {
        num_ = num * (1 / den.lc());
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num, den);
    Poly n = g.degree() > 0 ? poly_exact_div(num, g) : num;
    Poly d = g.degree() > 0 ? poly_exact_div(den, g) : den;
    Rational inv = 1 / d.lc();
    num_ = n * inv;
    den_ = d * inv;
}

RatFunc RatFunc::operator-() const { return RatFunc(Raw{}, -num_, den_); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(Errc::division_by_zero_polynomial, "RatFunc::inverse");
    Rational inv = 1 / num_.lc();
    return RatFunc(Raw{}, den_ * inv, num_ * inv);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (b.is_polynomial()) return RatFunc(RatFunc::Raw{}, a.num_ + b.num_ * a.den_, a.den_);
    if (a.is_polynomial()) return RatFunc(RatFunc::Raw{}, a.num_ * b.den_ + b.num_, b.den_);
    Poly g = poly_gcd(a.den_, b.den_);
    if (g.degree() == 0)
        return RatFunc(RatFunc::Raw{}, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly ad = poly_exact_div(a.den_, g), bd = poly_exact_div(b.den_, g);
    return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
    Poly n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
    if (d2.degree() > 0) {
        Poly g = poly_gcd(n1, d2);
        if (g.degree() > 0) {
            n1 = poly_exact_div(n1, g);
            d2 = poly_exact_div(d2, g);
        }
    }
    if (d1.degree() > 0) {
        Poly g = poly_gcd(n2, d1);
        if (g.degree() > 0) {
            n2 = poly_exact_div(n2, g);
            d1 = poly_exact_div(d1, g);
        }
    }
    Poly d = d1 * d2;
    Rational inv = 1 / d.lc();
    return RatFunc(RatFunc::Raw{}, n1 * n2 * inv, d * inv);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    return RatFunc(Raw{}, num_.pow(n), den_.pow(n));
}

Rational RatFunc::eval(const Rational& t) const {
    Rational d = den_.eval(t);
    if (sgn(d) == 0) throw Error(Errc::division_by_zero_polynomial, "RatFunc::eval at a pole");
    return num_.eval(t) / d;
}

RatFunc RatFunc::inflate(unsigned k) const { return RatFunc(Raw{}, num_.inflate(k), den_.inflate(k)); }

std::string RatFunc::str(std::string_view var) const {
    if (is_polynomial()) return num_.str(var);
    auto wrap = [&](const Poly& p) {
        std::string s = p.str(var);
        bool single = p.coeffs().size() - std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                                          [](const Rational& c) { return sgn(c) == 0; }) == 1;
        return single && s.find('/') == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(num_) + " / " + wrap(den_);
}

Place Place::infinity() { return Place(); }

Place Place::finite(const Poly& prime) {
    if (prime.degree() < 1) throw Error(Errc::unsupported_place, "constant prime");
    Poly p = prime.monic();
    if (p.degree() > 2) throw Error(Errc::unsupported_place, "prime of degree " + std::to_string(p.degree()));
    if (p.degree() == 2) {
        Rational disc = p.coeff(1) * p.coeff(1) - 4 * p.coeff(0);
        if (rational_is_square(disc)) throw Error(Errc::unsupported_place, "reducible quadratic " + p.str());
    }
    Place out;
    out.infinite_ = false;
    out.prime_ = std::move(p);
    return out;
}

std::string Place::str() const { return infinite_ ? "inf" : "(" + prime_.str() + ")"; }

int poly_valuation(const Poly& f, const Poly& prime) {
    if (f.is_zero()) throw Error(Errc::zero_input, "valuation");
    int v = 0;
    Poly g = f;
    for (;;) {
        auto [q, r] = euclid_divmod(g, prime);
        if (!r.is_zero()) return v;
        ++v;
        g = std::move(q);
    }
}

int valuation(const RatFunc& f, const Place& p) {
    if (f.is_zero()) throw Error(Errc::zero_input, "valuation");
    if (p.is_infinite()) return f.den().degree() - f.num().degree();
    return poly_valuation(f.num(), p.prime()) - poly_valuation(f.den(), p.prime());
}

SquareClass square_class(const RatFunc& f) {
    if (f.is_zero()) throw Error(Errc::zero_input, "square_class");
    Poly p = f.num() * f.den();
    auto sd = squarefree_decomposition(p);
    Poly odd(1);
    for (const auto& part : sd.parts)
        if (part.multiplicity % 2) odd *= part.factor;
    auto pp = primitive_part(odd);
    Integer s = rational_square_class(sd.unit * pp.scale);
    return SquareClass(pp.prim * Rational(s));
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) { return square_class(RatFunc(a.rep_ * b.rep_)); }

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& f) {
    auto n = poly_sqrt(f.num());
    if (!n) return std::nullopt;
    auto d = poly_sqrt(f.den());
    if (!d) return std::nullopt;
    return RatFunc(*n, *d);
}

bool is_square(const RatFunc& f) { return ratfunc_sqrt(f).has_value(); }

bool equiv_mod_place(const RatFunc& a, const RatFunc& b, const Place& p) {
    if (p.is_infinite() || p.prime().degree() != 1)
        throw Error(Errc::unsupported_place, "residue tests need a finite place of degree 1, got " + p.str());
    if (a.is_zero() || b.is_zero() || valuation(a, p) != 0 || valuation(b, p) != 0)
        throw Error(Errc::nonzero_valuation, "equiv_mod_place at " + p.str());
    Rational r = -p.prime().coeff(0);
    return rational_is_square(a.eval(r) / b.eval(r));
}

bool quad_ext_square_test(const RatFunc& alpha, const RatFunc& beta, const RatFunc& delta) {
    if (delta.is_zero() || is_square(delta)) throw Error(Errc::delta_is_square, "quad_ext_square_test");
    if (alpha.is_zero()) return beta.is_zero() || is_square(beta) || is_square(delta * beta);
    auto gamma = ratfunc_sqrt(beta * beta - delta * alpha * alpha);
    if (!gamma) return false;
    RatFunc half(Rational(1, 2));
    return is_square((beta + *gamma) * half) || is_square((beta - *gamma) * half);
}

bool is_psd(const RatFunc& f) {
    if (f.is_zero()) throw Error(Errc::zero_input, "is_psd");
    auto sd = squarefree_decomposition(f.num() * f.den());
    Poly odd(1);
    for (const auto& part : sd.parts)
        if (part.multiplicity % 2) odd *= part.factor;
    return sgn(sd.unit) > 0 && sturm_count_real_roots(odd) == 0;
}

} // namespace sos3
