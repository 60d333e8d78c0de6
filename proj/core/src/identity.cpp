#include "sos3/identity.hpp"

#include "sos3/error.hpp"

namespace sos3 {

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) t_[Exponent{0, 0, 0, 0}] = c;
}

MultiPoly MultiPoly::var(Var v) {
    MultiPoly p;
    Exponent e{0, 0, 0, 0};
    e[v] = 1;
    p.t_[e] = 1;
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.t_) {
        Rational& slot = t_[e];
        slot += c;
        if (slot == 0) t_.erase(e);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.t_) {
        for (const auto& [eb, cb] : b.t_) {
            MultiPoly::Exponent e;
            for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
            Rational& slot = r.t_[e];
            slot += ca * cb;
        }
    }
    std::erase_if(r.t_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly r(1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    static const char* names[4] = {"alpha", "beta", "gamma", "y"};
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += to_string(it->second);
        for (int i = 0; i < 4; ++i) {
            if (it->first[i] == 0) continue;
            out += std::string("*") + names[i];
            if (it->first[i] > 1) out += "^" + std::to_string(it->first[i]);
        }
    }
    return out;
}

namespace {

// Both sides over a commutative ring R given the generators; A stands for (a-1)/alpha.
template <class R>
struct Sides {
    R lhs, rhs;
};

template <class R>
Sides<R> build_sides(const R& al, const R& be, const R& ga, const R& y) {
    R one(1);
    R pb = one + be * be, pg = one + ga * ga;
    R A = al * pb * pg;
    R am1 = al * A;
    R a = one + am1;
    R b = one + am1 * pb;
    R c = one + am1 * pg;
    R y2 = y * y;
    R bg = be * ga;
    R abg = al * bg;
    R t1 = A * y * (y2 + a) + abg * ((one - bg) * y + be + ga) * (y2 + one);
    R t2 = A * (y2 + a) + abg * (one - bg - (be + ga) * y) * (y2 + one);
    R t3 = (y2 + one) * (y2 + a - bg * am1);
    return {(y2 + one) * (y2 + a) * (y2 + b) * (y2 + c), t1 * t1 + t2 * t2 + t3 * t3};
}

} // namespace

IdentityResult verify_sos3_identity_symbolic() {
    auto s = build_sides(MultiPoly::var(MultiPoly::alpha), MultiPoly::var(MultiPoly::beta),
                         MultiPoly::var(MultiPoly::gamma), MultiPoly::var(MultiPoly::y));
    MultiPoly diff = s.lhs - s.rhs;
    if (diff.is_zero()) return {true, ""};
    auto it = diff.terms().rbegin();
    std::string mono = to_string(it->second);
    static const char* names[4] = {"alpha", "beta", "gamma", "y"};
    for (int i = 0; i < 4; ++i)
        if (it->first[i]) mono += std::string("*") + names[i] + "^" + std::to_string(it->first[i]);
    return {false, mono};
}

IdentityResult verify_sos3_identity(const Rational& alpha, const Rational& beta, const Rational& gamma) {
    if (alpha == 0) throw Error(Errc::alpha_zero, "alpha must be nonzero");
    auto s = build_sides(Poly(alpha), Poly(beta), Poly(gamma), Poly::x());
    Poly diff = s.lhs - s.rhs;
    if (diff.is_zero()) return {true, ""};
    int k = diff.degree();
    return {false, to_string(diff.coeff(k)) + "*y^" + std::to_string(k)};
}

} // namespace sos3
