#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "fields.hpp"
#include "forms.hpp"
#include "tpoly.hpp"

namespace binforms {

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& m) : std::invalid_argument(m) {}
};

namespace parsing {

enum class Tok { Num, X0, X1, T, Star, Caret, Plus, Minus, End };

struct Token {
    Tok kind;
    std::string text;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '/') {
                std::size_t k = j + 1;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == j + 1) throw ParseError("expected digits after '/'");
                j = k;
            }
            out.push_back({Tok::Num, s.substr(i, j - i)});
            i = j;
            continue;
        }
        if (c == 'X' && i + 1 < s.size() && (s[i + 1] == '0' || s[i + 1] == '1')) {
            out.push_back({s[i + 1] == '0' ? Tok::X0 : Tok::X1, s.substr(i, 2)});
            i += 2;
            continue;
        }
        switch (c) {
            case 't': out.push_back({Tok::T, "t"}); ++i; break;
            case '*': out.push_back({Tok::Star, "*"}); ++i; break;
            case '^': out.push_back({Tok::Caret, "^"}); ++i; break;
            case '+': out.push_back({Tok::Plus, "+"}); ++i; break;
            case '-': out.push_back({Tok::Minus, "-"}); ++i; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "' in polynomial");
        }
    }
    out.push_back({Tok::End, ""});
    return out;
}

struct Monomial {
    std::string coeff = "1";  // rational literal
    bool negate = false;
    int x0 = 0, x1 = 0, t = 0;
};

/// expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := number | X0|X1|t ['^' nat]. Juxtaposition without '*' is
/// rejected, so stray whitespace can never act as an operator.
inline std::vector<Monomial> parse_monomials(const std::string& s, bool allow_xy, bool allow_t) {
    auto toks = tokenize(s);
    std::size_t pos = 0;
    auto peek = [&]() -> const Token& { return toks[pos]; };
    auto advance = [&]() -> const Token& { return toks[pos++]; };

    auto parse_exponent = [&]() -> int {
        if (peek().kind != Tok::Caret) return 1;
        ++pos;
        if (peek().kind != Tok::Num || peek().text.find('/') != std::string::npos)
            throw ParseError("expected a nonnegative integer exponent after '^'");
        int v = std::stoi(advance().text);
        return v;
    };

    std::vector<Monomial> out;
    bool first = true;
    for (;;) {
        Monomial m;
        if (peek().kind == Tok::Minus) { m.negate = true; ++pos; }
        else if (peek().kind == Tok::Plus && !first) { ++pos; }
        else if (peek().kind == Tok::Plus) { ++pos; }
        first = false;

        bool have_factor = false;
        bool expect_factor = true;
        bool coeff_seen = false;
        for (;;) {
            const Token& tk = peek();
            if (tk.kind == Tok::Num) {
                if (!expect_factor) throw ParseError("missing '*' before '" + tk.text + "'");
                if (coeff_seen) throw ParseError("two numeric factors; write a single rational");
                m.coeff = advance().text;
                coeff_seen = true;
                have_factor = true;
            } else if (tk.kind == Tok::X0 || tk.kind == Tok::X1) {
                if (!allow_xy) throw ParseError("variable " + tk.text + " not allowed here");
                if (!expect_factor) throw ParseError("missing '*' before '" + tk.text + "'");
                Tok k = advance().kind;
                int ex = parse_exponent();
                (k == Tok::X0 ? m.x0 : m.x1) += ex;
                have_factor = true;
            } else if (tk.kind == Tok::T) {
                if (!allow_t) throw ParseError("variable t not allowed here");
                if (!expect_factor) throw ParseError("missing '*' before 't'");
                ++pos;
                m.t += parse_exponent();
                have_factor = true;
            } else if (tk.kind == Tok::Star) {
                if (expect_factor) throw ParseError("unexpected '*'");
                ++pos;
                expect_factor = true;
                continue;
            } else {
                break;
            }
            expect_factor = false;
        }
        if (!have_factor) throw ParseError("expected a monomial");
        out.push_back(m);

        if (peek().kind == Tok::End) break;
        if (peek().kind != Tok::Plus && peek().kind != Tok::Minus)
            throw ParseError("expected '+' or '-' between monomials");
    }
    return out;
}

}  // namespace parsing

template <class K>
K scalar_from_literal(const std::string& lit, const FieldCtx<K>& ctx) {
    auto slash = lit.find('/');
    if (slash == std::string::npos) return ctx.from_string(lit);
    K num = ctx.from_string(lit.substr(0, slash));
    K den = ctx.from_string(lit.substr(slash + 1));
    return num / den;
}

template <>
inline Rat scalar_from_literal<Rat>(const std::string& lit, const FieldCtx<Rat>&) {
    return Rat::from_string(lit);
}

/// Parse a homogeneous form in X0, X1. Every monomial must have total
/// degree equal to `degree` when it is given (>= 0), or to the common
/// degree of the monomials otherwise.
template <class K>
BinaryForm<K> parse_form(const std::string& s, const FieldCtx<K>& ctx, int degree = -1) {
    auto mons = parsing::parse_monomials(s, true, false);
    int deg = degree;
    for (const auto& m : mons) {
        int total = m.x0 + m.x1;
        if (deg < 0) deg = total;
        if (total != deg)
            throw ParseError("monomial of degree " + std::to_string(total) +
                             " in a form of degree " + std::to_string(deg));
    }
    BinaryForm<K> f(deg);
    for (const auto& m : mons) {
        K c = scalar_from_literal(m.coeff, ctx);
        if (m.negate) c = -c;
        f.coeff(m.x1) += c;
    }
    return f;
}

/// Parse a polynomial in t.
template <class K>
Poly<K> parse_tpoly(const std::string& s, const FieldCtx<K>& ctx) {
    auto mons = parsing::parse_monomials(s, false, true);
    Poly<K> p;
    for (const auto& m : mons) {
        K c = scalar_from_literal(m.coeff, ctx);
        if (m.negate) c = -c;
        p += Poly<K>::monomial(m.t, c);
    }
    return p;
}

}  // namespace binforms
