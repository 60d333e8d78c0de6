#pragma once

#include "sos3/family.hpp"

#include <string>
#include <vector>

namespace sos3 {

enum class Verdict { proved, inconclusive };

struct Certificate {
    FamilyParams params;
    Verdict verdict = Verdict::inconclusive;
    std::vector<Check> checks; // sorted by id
    // First failing check in pipeline order (positivity, nonvanishing,
    // non-squares, torsion, descent); empty when everything passed.
    std::string first_failure;
    std::vector<std::string> notes;

    std::vector<const Check*> failures() const;
    // Deterministic JSON text; keys and checks in a fixed order.
    std::string to_json(int indent = 2) const;
    std::string summary() const;
};

Certificate prove_not_sos3(const FamilyParams& p);

} // namespace sos3
