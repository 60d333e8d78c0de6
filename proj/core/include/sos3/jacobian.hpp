#pragma once

#include "sos3/polyy.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sos3 {

// y^2 = f(y-variable) with f monic, squarefree, of odd degree 2g+1 over Q(x).
class Curve {
public:
    const PolyY& f() const { return data_->f; }
    int genus() const { return (data_->f.degree() - 1) / 2; }
    std::uint64_t id() const { return data_->id; }
    friend bool operator==(const Curve& a, const Curve& b) { return a.id() == b.id() && a.f() == b.f(); }
    friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

private:
    struct Data {
        PolyY f;
        std::uint64_t id;
    };
    friend Curve new_curve(const PolyY& f);
    std::shared_ptr<const Data> data_;
};

Curve new_curve(const PolyY& f);

// Semi-reduced divisor div(u, v) on a fixed curve.
class MumfordDivisor {
public:
    const Curve& curve() const { return curve_; }
    const PolyY& u() const { return u_; }
    const PolyY& v() const { return v_; }
    bool is_identity() const { return u_.is_one(); }
    bool is_reduced() const { return u_.degree() <= curve_.genus(); }
    std::string str(std::string_view var = "y", std::string_view xvar = "x") const;
    friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) {
        return a.curve_ == b.curve_ && a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const MumfordDivisor& a, const MumfordDivisor& b) { return !(a == b); }

private:
    MumfordDivisor(Curve c, PolyY u, PolyY v) : curve_(std::move(c)), u_(std::move(u)), v_(std::move(v)) {}
    friend MumfordDivisor mumford_validate(const PolyY& u, const PolyY& v, const Curve& c);
    friend MumfordDivisor identity(const Curve& c);
    friend MumfordDivisor reduce_unchecked(const Curve& c, PolyY u, PolyY v);
    Curve curve_;
    PolyY u_;
    PolyY v_;
};

MumfordDivisor identity(const Curve& c);
MumfordDivisor mumford_validate(const PolyY& u, const PolyY& v, const Curve& c);
// Reduction of a validated semi-reduced pair to the unique reduced representative.
MumfordDivisor reduce(const MumfordDivisor& d);
MumfordDivisor cantor_add(const MumfordDivisor& a, const MumfordDivisor& b);
MumfordDivisor negate(const MumfordDivisor& d);
MumfordDivisor scalar_mul(long n, const MumfordDivisor& d);

// Irreducibility of a factor of degree >= 3 cannot be decided here; the caller
// vouches for it by setting the matching entry of `certified`.
std::vector<MumfordDivisor> two_torsion(const Curve& c, const std::vector<PolyY>& factors,
                                        const std::vector<bool>& certified = {});

// Whether a factor is certified irreducible by degree or discriminant alone.
bool irreducible_by_degree(const PolyY& p);

} // namespace sos3
