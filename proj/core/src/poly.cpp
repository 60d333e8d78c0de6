#include "sos3/poly.hpp"

#include "sos3/error.hpp"

#include <sstream>

namespace sos3 {

Poly::Poly(const Rational& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly(std::vector<Rational>{0, 1}); }

Poly Poly::monomial(const Rational& c, unsigned k) {
    if (sgn(c) == 0) return {};
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    mpq_class t;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            r[i + j] += t;
        }
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= c;
    return *this;
}

Rational Poly::eval(const Rational& t) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Rational inv = 1 / lc();
    return *this * inv;
}

Poly Poly::compose(const Poly& q) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + Poly(*it);
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

Poly Poly::inflate(unsigned k) const {
    if (is_zero()) return {};
    std::vector<Rational> r((c_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return Poly(std::move(r));
}

std::string Poly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (sgn(c) == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

DivMod euclid_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Errc::division_by_zero_polynomial, "euclid_divmod");
    int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(a.degree() - db + 1);
    Rational inv = 1 / b.lc();
    const auto& bc = b.coeffs();
    mpq_class t;
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational& top = r[k + db];
        if (sgn(top) == 0) continue;
        Rational f = top * inv;
        q[k] = f;
        for (int j = 0; j <= db; ++j) {
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), bc[j].get_mpq_t());
            r[k + j] -= t;
        }
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_rem(const Poly& a, const Poly& b) { return euclid_divmod(a, b).remainder; }

Poly poly_exact_div(const Poly& a, const Poly& b) { return euclid_divmod(a, b).quotient; }

namespace {

using IntPoly = std::vector<Integer>; // low degree first, no trailing zeros

IntPoly to_primitive_int(const Poly& a) {
    PrimitivePart pp = primitive_part(a);
    IntPoly out;
    for (const auto& c : pp.prim.coeffs()) out.push_back(c.get_num());
    return out;
}

void make_primitive(IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b, made primitive.
IntPoly primitive_prem(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        Integer la = a.back();
        std::size_t shift = a.size() - 1 - db;
        Integer g;
        mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
        Integer fa = lb / g, fb = la / g;
        for (auto& c : a) c *= fa;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= fb * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    if (!a.empty()) make_primitive(a);
    return a;
}

} // namespace

// Primitive remainder sequence over Z; avoids rational coefficient swell.
Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw Error(Errc::both_inputs_zero, "poly_gcd");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly(1);
    IntPoly r0 = to_primitive_int(a), r1 = to_primitive_int(b);
    if (r0.size() < r1.size()) std::swap(r0, r1);
    while (!r1.empty()) {
        IntPoly r = primitive_prem(std::move(r0), r1);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    std::vector<Rational> c(r0.begin(), r0.end());
    return Poly(std::move(c)).monic();
}

ExtGcd poly_xgcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw Error(Errc::both_inputs_zero, "poly_xgcd");
    Poly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = euclid_divmod(r0, r1);
        Poly s = s0 - q * s1, t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    Rational inv = 1 / r0.lc();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Poly SquarefreeDecomposition::expand() const {
    Poly r(unit);
    for (const auto& p : parts) r *= p.factor.pow(p.multiplicity);
    return r;
}

SquarefreeDecomposition squarefree_decomposition(const Poly& a) {
    if (a.is_zero()) throw Error(Errc::zero_input, "squarefree_decomposition");
    SquarefreeDecomposition out{a.lc(), {}};
    Poly f = a.monic();
    if (f.degree() == 0) return out;
    Poly c = poly_gcd(f, f.derivative());
    Poly w = poly_exact_div(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = poly_exact_div(w, y);
        if (z.degree() > 0) out.parts.push_back({z, i});
        ++i;
        w = std::move(y);
        c = poly_exact_div(c, w);
    }
    return out;
}

Poly squarefree_kernel(const Poly& a) {
    Poly r(1);
    for (const auto& p : squarefree_decomposition(a).parts) r *= p.factor;
    return r;
}

bool is_squarefree(const Poly& a) {
    if (a.is_zero()) return false;
    return a.degree() == 0 || poly_gcd(a, a.derivative()).degree() == 0;
}

bool is_perfect_square_poly(const Poly& a, SquareMode mode) {
    if (a.is_zero()) throw Error(Errc::zero_input, "is_perfect_square_poly");
    auto sd = squarefree_decomposition(a);
    for (const auto& p : sd.parts)
        if (p.multiplicity % 2) return false;
    return mode == SquareMode::over_C || rational_is_square(sd.unit);
}

std::optional<Poly> poly_sqrt(const Poly& a) {
    if (a.is_zero()) return Poly();
    int n = a.degree();
    if (n % 2 || !rational_is_square(a.lc())) return std::nullopt;
    int m = n / 2;
    std::vector<Rational> s(m + 1);
    s[m] = rational_sqrt(a.lc());
    Rational two_top = 2 * s[m];
    for (int k = m - 1; k >= 0; --k) {
        Rational acc = a.coeff(m + k);
        for (int i = k + 1; i <= m; ++i) {
            int j = m + k - i;
            if (j > k && j <= m) acc -= s[i] * s[j];
        }
        s[k] = acc / two_top;
    }
    Poly r(std::move(s));
    if (r * r != a) return std::nullopt;
    return r;
}

Rational resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw Error(Errc::zero_input, "resultant");
    Rational acc = 1;
    Poly A = a, B = b;
    for (;;) {
        int n = A.degree(), m = B.degree();
        if (m == 0) {
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), B.lc().get_num_mpz_t(), n);
            mpz_pow_ui(p.get_den_mpz_t(), B.lc().get_den_mpz_t(), n);
            return acc * p;
        }
        if (n == 0) {
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), A.lc().get_num_mpz_t(), m);
            mpz_pow_ui(p.get_den_mpz_t(), A.lc().get_den_mpz_t(), m);
            return acc * p;
        }
        Poly R = poly_rem(A, B);
        if (R.is_zero()) return 0;
        if ((n * m) % 2) acc = -acc;
        for (int k = 0; k < n - R.degree(); ++k) acc *= B.lc();
        A = std::move(B);
        B = std::move(R);
    }
}

namespace {

std::size_t sign_changes(const std::vector<int>& s) {
    std::size_t n = 0;
    int prev = 0;
    for (int v : s) {
        if (v == 0) continue;
        if (prev != 0 && v != prev) ++n;
        prev = v;
    }
    return n;
}

} // namespace

std::size_t sturm_count_real_roots(const Poly& a) {
    if (a.is_zero()) throw Error(Errc::zero_input, "sturm_count_real_roots");
    if (!is_squarefree(a)) throw Error(Errc::non_squarefree, "sturm_count_real_roots");
    std::vector<Poly> chain{a, a.derivative()};
    while (!chain.back().is_zero()) {
        Poly r = -poly_rem(chain[chain.size() - 2], chain.back());
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    std::vector<int> at_pos, at_neg;
    for (const auto& p : chain) {
        int s = sgn(p.lc());
        at_pos.push_back(s);
        at_neg.push_back(p.degree() % 2 ? -s : s);
    }
    return sign_changes(at_neg) - sign_changes(at_pos);
}

std::size_t count_distinct_real_roots(const Poly& a) { return sturm_count_real_roots(squarefree_kernel(a)); }

PrimitivePart primitive_part(const Poly& a) {
    if (a.is_zero()) return {Rational(0), Poly()};
    Integer l = 1, g = 0;
    for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Rational> v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) {
        Integer n = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        v.emplace_back(n);
    }
    if (sgn(a.lc()) < 0) g = -g;
    for (auto& c : v) c /= g;
    Rational scale(g, l);
    scale.canonicalize();
    return {scale, Poly(std::move(v))};
}

} // namespace sos3
