#pragma once

#include "sos3/jacobian.hpp"

#include <string>
#include <vector>

namespace sos3 {

// Curve with f split into monic factors, each irreducible over Q(x).
class SchaeferContext {
public:
    // Irreducibility beyond degree 2 must be vouched for through `certified`.
    static SchaeferContext make(const Curve& c, std::vector<PolyY> factors, std::vector<bool> certified = {});

    const Curve& curve() const { return curve_; }
    const std::vector<PolyY>& factors() const { return factors_; }
    const std::vector<bool>& certified() const { return certified_; }

private:
    SchaeferContext(Curve c, std::vector<PolyY> f, std::vector<bool> cert)
        : curve_(std::move(c)), factors_(std::move(f)), certified_(std::move(cert)) {}
    Curve curve_;
    std::vector<PolyY> factors_;
    std::vector<bool> certified_;
};

struct ClassTuple {
    std::vector<SquareClass> components;

    bool norm_trivial() const;
    std::string str() const;
    friend bool operator==(const ClassTuple& a, const ClassTuple& b) { return a.components == b.components; }
    friend bool operator!=(const ClassTuple& a, const ClassTuple& b) { return !(a == b); }
    friend ClassTuple operator*(const ClassTuple& a, const ClassTuple& b);
};

// Component i is [(-1)^(deg u deg f_i) Res(f_i, u)]. Factors shared with u
// are split off as 2-torsion points <f_j, 0> and handled by the norm relation.
ClassTuple xi(const MumfordDivisor& D, const SchaeferContext& ctx);

bool xi_is_2torsion_image(const ClassTuple& t, const SchaeferContext& ctx);

// z^2 = y (y^2 + S y + T)
struct EllipticModel {
    RatFunc S;
    RatFunc T;
};

EllipticModel elliptic_dual(const EllipticModel& e);

struct EllipticPoint {
    enum class Kind { neutral, finite };
    Kind kind = Kind::neutral;
    RatFunc y;
    RatFunc z;

    static EllipticPoint neutral() { return {}; }
    static EllipticPoint at(const RatFunc& y, const RatFunc& z) { return {Kind::finite, y, z}; }
};

SquareClass elliptic_gamma(const EllipticPoint& p, const EllipticModel& e);

struct RichelotDual {
    RatFunc delta;
    PolyY L1, L2, L3;
    // L1 L2 L3 / delta
    PolyY quintic() const;
};

// [P, Q] = P' Q - P Q'
PolyY richelot_bracket(const PolyY& p, const PolyY& q);

RichelotDual richelot_dual(const PolyY& G1, const PolyY& G2, const PolyY& G3);

// The four curves of the split family for a given twist delta.
struct SplitFamily {
    RatFunc delta;
    Curve c_plus, c_minus, c_plus_hat, c_minus_hat;
    std::vector<PolyY> c_plus_factors;     // y + delta(1-E), y - delta E, y + delta E, y^2 - delta^2 D
    std::vector<PolyY> c_plus_hat_factors; // y + delta(1+C), y^2 - 4 delta^2 B, y^2 - 4 delta^2 C
    std::vector<PolyY> c_plus_quadratics;  // G1, G2, G3 for the Richelot construction
    EllipticModel c_minus_model;
    EllipticModel c_minus_hat_model;
};

SplitFamily split_family(const RatFunc& B, const RatFunc& C, const RatFunc& delta);

// Compares the Richelot dual of the plus curve with the hat-plus curve under
// y -> -y/2 - delta(1+C)/2. `scale` is the ratio of the two quintics when it
// is a constant of Q(x).
struct RichelotMatch {
    bool matches = false;
    RatFunc scale;
    bool scale_is_square = false;
};

RichelotMatch match_richelot(const SplitFamily& fam, const RatFunc& C);

} // namespace sos3
