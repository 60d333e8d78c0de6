#pragma once

#include <stdexcept>
#include <string>

namespace sos3 {

enum class Errc {
    division_by_zero_polynomial,
    both_inputs_zero,
    zero_input,
    non_squarefree,
    unsupported_place,
    nonzero_valuation,
    delta_is_square,
    not_monic,
    even_degree,
    not_squarefree,
    u_not_monic,
    deg_violation,
    u_does_not_divide,
    curve_mismatch,
    bad_factorization,
    d_zero,
    u_vanishes_at_zero,
    u_not_coprime,
    degenerate_curve,
    point_not_on_curve,
    degree_violation,
    singular_delta,
    squarefree_violation,
    parameter_degeneracy,
    alpha_zero,
    parse_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace sos3
