#pragma once

#include "sos3/antineutral.hpp"
#include "sos3/descent.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sos3 {

struct FamilyParams {
    Rational eta;
    Rational omega;
    Rational rho;
};

// Genus-3 model attached to Q together with its factorization f = g1 g2 g3,
// g1 = s, d = (1 - C(x^2))(B(x^2) - C(x^2)).
struct TildeData {
    TildeModel model;
    RatFunc d;
    PolyY g1, g2, g3;
};

struct TildeCache;

struct FamilyInstance {
    FamilyParams params;
    Rational b1;
    Poly B; // (x + b1)^2 - eta^2
    Poly C; // 2 (x + b1) + omega^2 - eta^2 - 1
    // Factors of P(x^2, y^2) in the curve variable: y^2 + 1, y^2 + C(x^2),
    // y^4 + (1 + C(x^2)) y^2 + B(x^2).
    std::vector<PolyY> P_factors;
    // (T + C(x^2)) (T^2 + (1 + C(x^2)) T + B(x^2))
    PolyY Q;
    // Built on first use by instance_tilde; shared between copies.
    std::shared_ptr<TildeCache> tilde_cache;
};

FamilyInstance build_family(const FamilyParams& p);

// Throws, on every call, when (y^2+1) Q(y^2) is not squarefree.
const TildeData& instance_tilde(const FamilyInstance& inst);

struct Check {
    std::string id;
    std::string statement;
    bool pass = false;
    std::string witness;
};

std::vector<Check> check_positivity(const FamilyInstance& inst);
std::vector<Check> check_nonvanishing(const FamilyInstance& inst);
std::vector<Check> check_nonsquares(const FamilyInstance& inst);

// Named rational quantities entering the non-square conditions, e.g. "a", "i.101".
struct NonsquareItem {
    std::string label;
    std::string expression;
    Rational value;
};
std::vector<NonsquareItem> nonsquare_items(const FamilyParams& p, const Rational& b1);

// Non-square conditions over C(x) on B, C and their combinations.
std::vector<Check> torsion_nonsquare_checks(const Poly& B, const Poly& C);

std::vector<Check> torsion_certificate(const FamilyInstance& inst);

// Requires the positivity, nonvanishing and non-square groups to have passed;
// `prior` holds their outcomes, from which the hypothesis checks are read.
std::vector<Check> descent_certificate(const FamilyInstance& inst, const std::vector<Check>& prior);

} // namespace sos3
