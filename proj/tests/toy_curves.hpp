#pragma once

#include "sos3/descent.hpp"
#include "sos3/family.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace toy {

using namespace sos3;

inline RatFunc X() { return RatFunc(Poly::x()); }

// Genus-3 curve through seven chosen points (i, i + x), i = 1..7:
// f = prod (y - i) + L(y) with L interpolating (i + x)^2.
struct PointedCurve {
    Curve curve;
    std::vector<MumfordDivisor> points;
};

inline PointedCurve interpolation_curve() {
    const int n = 7;
    PolyY y = PolyY::y();
    PolyY prod(1);
    for (int i = 1; i <= n; ++i) prod = prod * PolyY::linear(RatFunc(i));
    PolyY L;
    for (int i = 1; i <= n; ++i) {
        PolyY basis(1);
        Rational denom = 1;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            basis = basis * PolyY::linear(RatFunc(j));
            denom *= Rational(i - j);
        }
        RatFunc w = RatFunc(i) + X();
        L += (w * w / RatFunc(denom)) * basis;
    }
    PointedCurve pc{new_curve(prod + L), {}};
    for (int i = 1; i <= n; ++i)
        pc.points.push_back(mumford_validate(PolyY::linear(RatFunc(i)), PolyY(RatFunc(i) + X()), pc.curve));
    return pc;
}

// Genus-2 curve prod (y - x^2 e) over e in {0, -6, -3, 4, 5}; rational points of
// the constant curve at r in {-5, -4, 3, 6, 9, 60} lift to (x^2 r, x^5 w).
struct FactoredCurve {
    Curve curve;
    std::vector<PolyY> factors;
    std::vector<MumfordDivisor> points;
};

inline FactoredCurve schaefer_curve() {
    const long es[] = {0, -6, -3, 4, 5};
    RatFunc x2 = X() * X();
    FactoredCurve fc;
    PolyY f(1);
    for (long e : es) {
        fc.factors.push_back(PolyY::linear(RatFunc(e) * x2));
        f = f * fc.factors.back();
    }
    fc.curve = new_curve(f);
    RatFunc x5 = x2 * x2 * X();
    for (long r : {-5L, -4L, 3L, 6L, 9L, 60L}) {
        Rational v = 1;
        for (long e : es) v *= Rational(r - e);
        fc.points.push_back(mumford_validate(PolyY::linear(RatFunc(r) * x2), PolyY(RatFunc(rational_sqrt(v)) * x5), fc.curve));
    }
    return fc;
}

// Sum of random small multiples of the given points.
inline MumfordDivisor random_divisor(const std::vector<MumfordDivisor>& pts, std::mt19937& rng, int spread = 2) {
    std::uniform_int_distribution<int> coef(-spread, spread);
    MumfordDivisor acc = identity(pts.front().curve());
    for (const auto& p : pts) {
        int c = coef(rng);
        if (c) acc = cantor_add(acc, scalar_mul(c, p));
    }
    return acc;
}

// Sum of up to `max_points` distinct points with random signs; already reduced
// when max_points <= genus, and of small height.
inline MumfordDivisor random_small_divisor(const std::vector<MumfordDivisor>& pts, std::mt19937& rng,
                                           std::size_t max_points) {
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::uniform_int_distribution<std::size_t> count(0, max_points);
    std::bernoulli_distribution sign(0.5);
    MumfordDivisor acc = identity(pts.front().curve());
    std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = pts[idx[i]];
        acc = cantor_add(acc, sign(rng) ? p : negate(p));
    }
    return acc;
}

// Toy family member B = x + 2, C = x, used without the x -> x^2 substitution.
inline PolyY toy_Q() {
    RatFunc B = X() + RatFunc(2), C = X();
    PolyY y = PolyY::y();
    return (y + PolyY(C)) * (y * y + (RatFunc(1) + C) * y + PolyY(B));
}

} // namespace toy
