#include "sos3/rational.hpp"

#include "sos3/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace sos3 {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::division_by_zero_polynomial: return "division-by-zero-polynomial";
    case Errc::both_inputs_zero: return "both-inputs-zero";
    case Errc::zero_input: return "zero-input";
    case Errc::non_squarefree: return "non-squarefree";
    case Errc::unsupported_place: return "unsupported-place";
    case Errc::nonzero_valuation: return "nonzero-valuation";
    case Errc::delta_is_square: return "delta-is-square";
    case Errc::not_monic: return "not-monic";
    case Errc::even_degree: return "even-degree";
    case Errc::not_squarefree: return "not-squarefree";
    case Errc::u_not_monic: return "u-not-monic";
    case Errc::deg_violation: return "deg-violation";
    case Errc::u_does_not_divide: return "u-does-not-divide-v2-f";
    case Errc::curve_mismatch: return "curve-mismatch";
    case Errc::bad_factorization: return "bad-factorization";
    case Errc::d_zero: return "d-zero";
    case Errc::u_vanishes_at_zero: return "u-vanishes-at-zero";
    case Errc::u_not_coprime: return "u-not-coprime-to-f";
    case Errc::degenerate_curve: return "degenerate-curve";
    case Errc::point_not_on_curve: return "point-not-on-curve";
    case Errc::degree_violation: return "degree-violation";
    case Errc::singular_delta: return "singular-delta";
    case Errc::squarefree_violation: return "squarefree-violation";
    case Errc::parameter_degeneracy: return "parameter-degeneracy";
    case Errc::alpha_zero: return "alpha-zero";
    case Errc::parse_error: return "parse-error";
    }
    return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den))
        throw Error(Errc::parse_error, "not a rational literal: '" + std::string(text) + "'");
    Integer n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool rational_is_square(const Rational& q) {
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

Rational rational_sqrt(const Rational& q) {
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return Rational(n, d);
}

namespace {

void pollard_brent(const Integer& n, Integer& factor) {
    // Brent's cycle variant of Pollard rho; n is odd, composite, not a perfect power of a small prime.
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1, m = 128;
        auto f = [&](Integer& v) {
            v = v * v + c;
            v %= n;
        };
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    f(y);
                    Integer diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                f(ys);
                Integer diff = x - ys;
                g = gcd(abs(diff), n);
            } while (g == 1);
        }
        if (g != n) {
            factor = g;
            return;
        }
    }
}

void factor_rec(const Integer& n, std::map<Integer, unsigned>& out, unsigned mult) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out[n] += mult;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2;; ++k) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                factor_rec(root, out, mult * static_cast<unsigned>(k));
                return;
            }
        }
    }
    Integer d;
    pollard_brent(n, d);
    Integer e = n / d;
    factor_rec(d, out, mult);
    factor_rec(e, out, mult);
}

} // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n0) {
    Integer n = abs(n0);
    std::map<Integer, unsigned> acc;
    for (unsigned long p = 2; p < 10000 && n > 1; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++acc[Integer(p)];
            n /= p;
        }
    }
    factor_rec(n, acc, 1);
    return {acc.begin(), acc.end()};
}

Integer squarefree_part(const Integer& n) {
    Integer s = 1;
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2) s *= p;
    return s;
}

Integer rational_square_class(const Rational& q) {
    Integer s = squarefree_part(q.get_num() * q.get_den());
    return sgn(q) < 0 ? Integer(-s) : s;
}

} // namespace sos3
