#include "sos3/parse.hpp"

#include "sos3/error.hpp"

#include <cctype>

namespace sos3 {

namespace {

class Parser {
public:
    Parser(std::string_view text, const ParseContext& ctx) : s_(text), ctx_(ctx) {}

    PolyY parse_all() {
        PolyY v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(Errc::parse_error, msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool starts_factor() {
        char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    PolyY expr() {
        PolyY acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    PolyY term() {
        PolyY acc = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos_;
                PolyY d = unary();
                if (d.degree() != 0) fail("division by a non-scalar");
                acc = d.lc().inverse() * acc;
            } else if (starts_factor()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    PolyY unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    long exponent() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        long e = std::stol(std::string(s_.substr(start, pos_ - start)));
        return neg ? -e : e;
    }

    PolyY power() {
        PolyY base = atom();
        if (peek() == '^') {
            ++pos_;
            bool paren = peek() == '(';
            if (paren) ++pos_;
            long e = exponent();
            if (paren) {
                if (peek() != ')') fail("expected ')'");
                ++pos_;
            }
            if (e < 0) {
                if (base.degree() != 0) fail("negative power of a non-scalar");
                return PolyY(base.lc().pow(static_cast<int>(e)));
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    PolyY atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            PolyY v = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return PolyY(RatFunc(Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            if (name == ctx_.xvar) return PolyY(RatFunc(Poly::x()));
            if (!ctx_.yvar.empty() && name == ctx_.yvar) return PolyY::y();
            auto it = ctx_.symbols.find(name);
            if (it != ctx_.symbols.end()) return it->second;
            pos_ = start;
            fail("unknown identifier '" + std::string(name) + "'");
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const ParseContext& ctx_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

PolyY parse_polyy(std::string_view text, const ParseContext& ctx) { return Parser(text, ctx).parse_all(); }

RatFunc parse_ratfunc(std::string_view text, std::string_view var) {
    ParseContext ctx;
    ctx.xvar = std::string(var);
    PolyY p = parse_polyy(text, ctx);
    return p.coeff(0);
}

Poly parse_poly(std::string_view text, std::string_view var) {
    RatFunc r = parse_ratfunc(text, var);
    if (!r.is_polynomial()) throw Error(Errc::parse_error, "not a polynomial: '" + std::string(text) + "'");
    return r.num();
}

MumfordDivisor parse_divisor(std::string_view text, const Curve& c, const ParseContext& ctx) {
    std::string_view s = trim(text);
    if (s == "id") return identity(c);
    if (s.size() < 2 || s.front() != '<' || s.back() != '>')
        throw Error(Errc::parse_error, "divisor must look like '<u ; v>' or 'id': '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    auto semi = s.find(';');
    if (semi == std::string_view::npos) throw Error(Errc::parse_error, "missing ';' in divisor '" + std::string(text) + "'");
    PolyY u = parse_polyy(s.substr(0, semi), ctx);
    PolyY v = parse_polyy(s.substr(semi + 1), ctx);
    return mumford_validate(u, v, c);
}

} // namespace sos3
