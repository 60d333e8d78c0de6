#pragma once

#include "sos3/poly.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace sos3 {

// Reduced fraction num/den in Q(x) with den monic.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
    bool is_one() const { return is_polynomial() && num_.is_one(); }

    RatFunc operator-() const;
    RatFunc inverse() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(int n) const;
    // Value at t; the denominator must not vanish there.
    Rational eval(const Rational& t) const;
    // x -> x^k
    RatFunc inflate(unsigned k) const;

    std::string str(std::string_view var = "x") const;

private:
    struct Raw {};
    RatFunc(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

class Place {
public:
    static Place infinity();
    // The prime is made monic; degree 1, or degree 2 with non-square discriminant.
    static Place finite(const Poly& prime);

    bool is_infinite() const { return infinite_; }
    const Poly& prime() const { return prime_; }
    std::string str() const;

private:
    bool infinite_ = true;
    Poly prime_;
};

int valuation(const RatFunc& f, const Place& p);
int poly_valuation(const Poly& f, const Poly& prime);

// Representative of f modulo squares: a squarefree primitive-times-content
// integer polynomial, content squarefree, sign on the leading coefficient.
class SquareClass {
public:
    SquareClass() : rep_(1) {}
    const Poly& rep() const { return rep_; }
    bool is_trivial() const { return rep_.is_one(); }
    std::string str(std::string_view var = "x") const { return rep_.str(var); }
    friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const SquareClass& a, const SquareClass& b) { return !(a == b); }
    friend bool operator<(const SquareClass& a, const SquareClass& b) { return a.str() < b.str(); }
    friend SquareClass operator*(const SquareClass& a, const SquareClass& b);

private:
    friend SquareClass square_class(const RatFunc& f);
    explicit SquareClass(Poly rep) : rep_(std::move(rep)) {}
    Poly rep_;
};

SquareClass square_class(const RatFunc& f);

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& f);
bool is_square(const RatFunc& f);

bool equiv_mod_place(const RatFunc& a, const RatFunc& b, const Place& p);

// Whether alpha*U + beta is a square in Q(x)[U]/(U^2 - delta).
bool quad_ext_square_test(const RatFunc& alpha, const RatFunc& beta, const RatFunc& delta);

// Nonnegative on the real line, i.e. a sum of two squares in R(x).
bool is_psd(const RatFunc& f);

RatFunc parse_ratfunc(std::string_view text, std::string_view var = "x");

} // namespace sos3
