#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sos3 {

// mpq_class keeps every value canonical after each operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

bool rational_is_square(const Rational& q);
// Precondition: q is a square.
Rational rational_sqrt(const Rational& q);

// Prime factorization of |n| for n != 0, as (prime, exponent) pairs in
// increasing prime order.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

// Squarefree positive integer s with n/s a square in Q, for n > 0.
Integer squarefree_part(const Integer& n);

// Squarefree integer (sign kept) in the square class of q != 0.
Integer rational_square_class(const Rational& q);

} // namespace sos3
