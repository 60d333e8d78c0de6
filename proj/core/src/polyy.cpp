#include "sos3/polyy.hpp"

#include "sos3/error.hpp"

#include <cstdint>
#include <sstream>

namespace sos3 {

PolyY::PolyY(const RatFunc& c) {
    if (!c.is_zero()) c_.push_back(c);
}

PolyY::PolyY(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyY PolyY::y() { return PolyY(std::vector<RatFunc>{RatFunc(), RatFunc(1)}); }

PolyY PolyY::monomial(const RatFunc& c, unsigned k) {
    if (c.is_zero()) return {};
    std::vector<RatFunc> v(k + 1);
    v[k] = c;
    return PolyY(std::move(v));
}

PolyY PolyY::linear(const RatFunc& r) { return PolyY(std::vector<RatFunc>{-r, RatFunc(1)}); }

void PolyY::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatFunc PolyY::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return {};
    return c_[i];
}

PolyY PolyY::operator-() const {
    PolyY r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

PolyY& PolyY::operator+=(const PolyY& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyY& PolyY::operator-=(const PolyY& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyY operator*(const PolyY& a, const PolyY& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<RatFunc> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyY(std::move(r));
}

PolyY operator*(const RatFunc& c, const PolyY& a) {
    if (c.is_zero()) return {};
    PolyY r = a;
    for (auto& v : r.c_) v = c * v;
    return r;
}

RatFunc PolyY::eval(const RatFunc& t) const {
    RatFunc r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

PolyY PolyY::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<RatFunc> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * RatFunc(static_cast<long>(i));
    return PolyY(std::move(r));
}

PolyY PolyY::monic() const {
    if (is_zero() || lc().is_one()) return *this;
    return lc().inverse() * *this;
}

PolyY PolyY::pow(unsigned n) const {
    PolyY r(1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

PolyY PolyY::compose(const PolyY& q) const {
    PolyY r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + PolyY(*it);
    return r;
}

PolyY PolyY::inflate_x(unsigned k) const {
    PolyY r = *this;
    for (auto& c : r.c_) c = c.inflate(k);
    return r;
}

std::string PolyY::str(std::string_view var, std::string_view xvar) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const RatFunc& c = c_[i];
        if (c.is_zero()) continue;
        if (c.is_constant()) {
            Rational v = c.num().coeff(0);
            if (first) {
                if (sgn(v) < 0) os << "-";
            } else {
                os << (sgn(v) < 0 ? " - " : " + ");
            }
            Rational a = abs(v);
            if (i == 0)
                os << a.get_str();
            else if (a != 1)
                os << a.get_str() << "*";
        } else {
            if (!first) os << " + ";
            os << "(" << c.str(xvar) << ")";
            if (i > 0) os << "*";
        }
        first = false;
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

DivModY divmod(const PolyY& a, const PolyY& b) {
    if (b.is_zero()) throw Error(Errc::division_by_zero_polynomial, "divmod");
    int db = b.degree();
    if (a.degree() < db) return {PolyY(), a};
    std::vector<RatFunc> r = a.coeffs();
    std::vector<RatFunc> q(a.degree() - db + 1);
    RatFunc inv = b.lc().inverse();
    const auto& bc = b.coeffs();
    for (int k = a.degree() - db; k >= 0; --k) {
        const RatFunc& top = r[k + db];
        if (top.is_zero()) continue;
        RatFunc f = top * inv;
        q[k] = f;
        for (int j = 0; j < db; ++j)
            if (!bc[j].is_zero()) r[k + j] -= f * bc[j];
        r[k + db] = RatFunc();
    }
    r.resize(db);
    return {PolyY(std::move(q)), PolyY(std::move(r))};
}

PolyY rem(const PolyY& a, const PolyY& b) { return divmod(a, b).remainder; }

PolyY exact_div(const PolyY& a, const PolyY& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(Errc::u_does_not_divide, "inexact division");
    return q;
}

PolyY gcd(const PolyY& a, const PolyY& b) {
    if (a.is_zero() && b.is_zero()) throw Error(Errc::both_inputs_zero, "gcd");
    PolyY r0 = a, r1 = b;
    while (!r1.is_zero()) {
        PolyY r = rem(r0, r1).monic();
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return r0.monic();
}

ExtGcdY xgcd(const PolyY& a, const PolyY& b) {
    if (a.is_zero() && b.is_zero()) throw Error(Errc::both_inputs_zero, "xgcd");
    PolyY r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        PolyY s = s0 - q * s1, t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    RatFunc inv = r0.lc().inverse();
    return {inv * r0, inv * s0, inv * t0};
}

bool is_squarefree(const PolyY& a) {
    if (a.is_zero()) return false;
    return a.degree() == 0 || gcd(a, a.derivative()).degree() == 0;
}

PolyY reciprocal_scaled(const PolyY& h, unsigned n, const RatFunc& c) {
    if (h.degree() > static_cast<int>(n)) throw Error(Errc::deg_violation, "reciprocal_scaled");
    std::vector<RatFunc> r(n + 1);
    RatFunc cp(1);
    for (int i = 0; i <= h.degree(); ++i) {
        r[n - i] = h.coeff(i) * cp;
        cp = cp * c;
    }
    return PolyY(std::move(r));
}

RatFunc resultant(const PolyY& a, const PolyY& b) {
    if (a.is_zero() || b.is_zero()) throw Error(Errc::zero_input, "resultant");
    RatFunc acc(1);
    PolyY A = a, B = b;
    for (;;) {
        int n = A.degree(), m = B.degree();
        if (m == 0) return acc * B.lc().pow(n);
        if (n == 0) return acc * A.lc().pow(m);
        PolyY R = rem(A, B);
        if (R.is_zero()) return {};
        if ((n * m) % 2) acc = -acc;
        acc = acc * B.lc().pow(n - R.degree());
        A = std::move(B);
        B = std::move(R);
    }
}

std::uint64_t content_hash(const PolyY& a) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : a.str("y", "x")) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace sos3
