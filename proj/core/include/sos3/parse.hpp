#pragma once

#include "sos3/jacobian.hpp"

#include <map>
#include <string>
#include <string_view>

namespace sos3 {

// Grammar: sums, products (explicit '*' or juxtaposition), '/', unary minus,
// integer powers and parentheses over integer literals and identifiers.
struct ParseContext {
    std::string xvar = "x";
    std::string yvar; // empty: expressions may not mention the curve variable
    std::map<std::string, PolyY, std::less<>> symbols;
};

PolyY parse_polyy(std::string_view text, const ParseContext& ctx);

// "<u ; v>" or "id".
MumfordDivisor parse_divisor(std::string_view text, const Curve& c, const ParseContext& ctx);

} // namespace sos3
