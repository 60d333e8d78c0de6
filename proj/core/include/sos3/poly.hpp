#pragma once

#include "sos3/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sos3 {

// Dense univariate polynomial over Q; coefficient i belongs to x^i.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x();
    static Poly monomial(const Rational& c, unsigned k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const;
    Rational coeff(int i) const;
    const Rational& lc() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rational eval(const Rational& t) const;
    Poly derivative() const;
    Poly monic() const;
    Poly compose(const Poly& q) const;
    Poly pow(unsigned n) const;
    // x -> x^k
    Poly inflate(unsigned k) const;

    std::string str(std::string_view var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

DivMod euclid_divmod(const Poly& a, const Poly& b);
Poly poly_rem(const Poly& a, const Poly& b);
// Exact division; the caller guarantees b | a.
Poly poly_exact_div(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);

struct ExtGcd {
    Poly g; // monic
    Poly s;
    Poly t; // s*a + t*b = g
};
ExtGcd poly_xgcd(const Poly& a, const Poly& b);

struct SquarefreePart {
    Poly factor; // monic
    unsigned multiplicity;
};

struct SquarefreeDecomposition {
    Rational unit;
    std::vector<SquarefreePart> parts; // multiplicities strictly increasing
    Poly expand() const;
};

SquarefreeDecomposition squarefree_decomposition(const Poly& a);
// Monic product of the distinct irreducible factors of a.
Poly squarefree_kernel(const Poly& a);
bool is_squarefree(const Poly& a);

enum class SquareMode { over_C, over_Q };
bool is_perfect_square_poly(const Poly& a, SquareMode mode);
std::optional<Poly> poly_sqrt(const Poly& a);

// res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r), the determinant of the
// Sylvester matrix whose first deg(b) rows carry the coefficients of a.
Rational resultant(const Poly& a, const Poly& b);

std::size_t sturm_count_real_roots(const Poly& a);
// Number of distinct real roots of any nonzero polynomial.
std::size_t count_distinct_real_roots(const Poly& a);

// a = scale * prim with prim a primitive integer polynomial with positive
// leading coefficient (prim = 0 for a = 0).
struct PrimitivePart {
    Rational scale;
    Poly prim;
};
PrimitivePart primitive_part(const Poly& a);

Poly parse_poly(std::string_view text, std::string_view var = "x");

} // namespace sos3
