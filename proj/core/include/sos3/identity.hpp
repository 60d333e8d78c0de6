#pragma once

#include "sos3/poly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace sos3 {

// Sparse polynomial over Q in the four indeterminates alpha, beta, gamma, y.
class MultiPoly {
public:
    using Exponent = std::array<unsigned, 4>;
    enum Var { alpha = 0, beta = 1, gamma = 2, y = 3 };

    MultiPoly() = default;
    MultiPoly(const Rational& c);
    MultiPoly(long c) : MultiPoly(Rational(c)) {}
    static MultiPoly var(Var v);

    const std::map<Exponent, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }

    MultiPoly pow(unsigned n) const;
    std::string str() const;

private:
    std::map<Exponent, Rational> t_;
};

struct IdentityResult {
    bool holds = false;
    // First differing monomial of LHS - RHS when the identity fails.
    std::string mismatch;
};

// Three-square decomposition of (y^2+1)(y^2+a)(y^2+b)(y^2+c) with
// a = 1 + alpha^2 (1+beta^2)(1+gamma^2), b = 1 + alpha^2 (1+beta^2)^2 (1+gamma^2),
// c = 1 + alpha^2 (1+beta^2)(1+gamma^2)^2, over indeterminates.
IdentityResult verify_sos3_identity_symbolic();

// Same identity at rational parameters; alpha must be nonzero.
IdentityResult verify_sos3_identity(const Rational& alpha, const Rational& beta, const Rational& gamma);

} // namespace sos3
