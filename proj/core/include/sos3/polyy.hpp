#pragma once

#include "sos3/ratfunc.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sos3 {

// Dense polynomial in the curve variable with coefficients in Q(x).
class PolyY {
public:
    PolyY() = default;
    PolyY(const RatFunc& c);
    PolyY(long c) : PolyY(RatFunc(c)) {}
    explicit PolyY(std::vector<RatFunc> coeffs);

    static PolyY y();
    static PolyY monomial(const RatFunc& c, unsigned k);
    // y - r
    static PolyY linear(const RatFunc& r);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    RatFunc coeff(int i) const;
    const RatFunc& lc() const { return c_.back(); }
    const std::vector<RatFunc>& coeffs() const { return c_; }

    PolyY operator-() const;
    PolyY& operator+=(const PolyY& o);
    PolyY& operator-=(const PolyY& o);
    friend PolyY operator+(PolyY a, const PolyY& b) { return a += b; }
    friend PolyY operator-(PolyY a, const PolyY& b) { return a -= b; }
    friend PolyY operator*(const PolyY& a, const PolyY& b);
    friend PolyY operator*(const RatFunc& c, const PolyY& a);
    friend PolyY operator*(const PolyY& a, const RatFunc& c) { return c * a; }
    friend bool operator==(const PolyY& a, const PolyY& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyY& a, const PolyY& b) { return !(a == b); }

    RatFunc eval(const RatFunc& t) const;
    PolyY derivative() const;
    PolyY monic() const;
    PolyY pow(unsigned n) const;
    PolyY compose(const PolyY& q) const;
    // Coefficients with x replaced by x^k.
    PolyY inflate_x(unsigned k) const;

    std::string str(std::string_view var = "y", std::string_view xvar = "x") const;

private:
    void trim();
    std::vector<RatFunc> c_;
};

struct DivModY {
    PolyY quotient;
    PolyY remainder;
};

DivModY divmod(const PolyY& a, const PolyY& b);
PolyY rem(const PolyY& a, const PolyY& b);
// Throws when the division leaves a remainder.
PolyY exact_div(const PolyY& a, const PolyY& b);
PolyY gcd(const PolyY& a, const PolyY& b);

struct ExtGcdY {
    PolyY g; // monic
    PolyY s;
    PolyY t;
};
ExtGcdY xgcd(const PolyY& a, const PolyY& b);

bool is_squarefree(const PolyY& a);

// s^n * h(c/s) for deg h <= n.
PolyY reciprocal_scaled(const PolyY& h, unsigned n, const RatFunc& c);

// Resultant with the same Sylvester convention as the Q[x] version.
RatFunc resultant(const PolyY& a, const PolyY& b);

// Deterministic 64-bit digest of the canonical coefficient text.
std::uint64_t content_hash(const PolyY& a);

} // namespace sos3
