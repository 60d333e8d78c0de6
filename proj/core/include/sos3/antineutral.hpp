#pragma once

#include "sos3/jacobian.hpp"

namespace sos3 {

// Curve t^2 = -(s/d)(s-d)^(2g) Q(-((s+d)/(s-d))^2) attached to
// z^2 + (y^2+1) Q(y^2) = 0, with d = -Q(-1).
struct TildeModel {
    PolyY Q;
    RatFunc d;
    Curve tilde_curve;
    int g = 0;
};

TildeModel build_tilde(const PolyY& Q);

// Semi-reduced pair of the image of D under s -> d^2/s plus div(s^e),
// e = floor((deg u + 1)/2). Requires u(0) != 0.
MumfordDivisor omega_image(const MumfordDivisor& D, const TildeModel& m);

// -(s/d)^(g+1) * tau(v) reduced modulo u, as used by the even-degree criterion.
PolyY twisted_remainder(const PolyY& v, const PolyY& u, const TildeModel& m);

// Reduced representative of the class of the image of D; any reduced D.
MumfordDivisor omega_class(const MumfordDivisor& D, const TildeModel& m);

// Closed-form invariance criterion (even-degree and degree-g cases). Requires u(0) != 0.
bool invariance_criterion(const MumfordDivisor& D, const TildeModel& m);

// Invariance decided by comparing classes with Cantor subtraction.
bool invariance_by_cantor(const MumfordDivisor& D, const TildeModel& m);

// Uses the criterion; a point (0,0) in the support is split off first, since
// <s,0> is itself invariant.
bool is_sigma_invariant(const MumfordDivisor& D, const TildeModel& m);

enum class Varpi { not_invariant, invariant_trivial, invariant_antineutral, invariant_not_antineutral };
const char* varpi_name(Varpi v);

Varpi varpi_antineutral(const MumfordDivisor& D, const TildeModel& m);

} // namespace sos3
