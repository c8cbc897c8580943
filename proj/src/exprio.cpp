#include "hdc/exprio.hpp"

#include <cctype>

namespace hdc {

std::string var_name(int v) {
    switch (v) {
        case kVarX: return "x";
        case kVarY: return "y";
        case kVarZ: return "z";
        case kVarT: return "t";
        case kVarU: return "u";
        case kVarV: return "v";
        default: return "lambda_" + std::to_string(v - 2);
    }
}

int var_index(const std::string& name) {
    if (name == "x") return kVarX;
    if (name == "y") return kVarY;
    if (name == "z") return kVarZ;
    if (name == "t") return kVarT;
    if (name.rfind("lambda_", 0) == 0) {
        const std::string num = name.substr(7);
        if (num.empty() || num.size() > 3) return -1;
        for (char c : num)
            if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
        int i = std::stoi(num);
        if (i < 1 || i > kMaxLambda) return -1;
        return lambda_var(i - 1);
    }
    return -1;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void error(const std::string& msg) const {
        fail("ParseError",
             msg + " at line " + std::to_string(line) + ", column " + std::to_string(col));
    }

    void advance() {
        if (pos < s.size()) {
            if (s[pos] == '\n') { ++line; col = 1; }
            else ++col;
            ++pos;
        }
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) { advance(); return true; }
        return false;
    }

    Integer read_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            error("expected number");
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos];
            advance();
        }
        return Integer(digits);
    }

    MPoly<Rational> parse_expr() {
        MPoly<Rational> r = parse_term();
        while (true) {
            if (accept('+')) r = r + parse_term();
            else if (accept('-')) r = r - parse_term();
            else return r;
        }
    }

    MPoly<Rational> parse_term() {
        MPoly<Rational> r = parse_factor();
        while (accept('*')) r = r * parse_factor();
        return r;
    }

    MPoly<Rational> parse_factor() {
        MPoly<Rational> b = parse_base();
        if (accept('^')) {
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                error("expected exponent");
            Integer e = read_uint();
            if (e > 512) error("exponent too large");
            return b.pow(static_cast<int>(e.get_si()));
        }
        return b;
    }

    MPoly<Rational> parse_base() {
        char c = peek();
        if (c == '-') {
            // unary minus binds after '^' so that "-x^2" means -(x^2) and
            // printed polynomials reparse to themselves
            advance();
            return -parse_factor();
        }
        if (c == '(') {
            advance();
            MPoly<Rational> e = parse_expr();
            if (!accept(')')) error("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = read_uint();
            if (pos < s.size() && s[pos] == '/') {
                advance();
                if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                    error("expected denominator");
                Integer den = read_uint();
                if (den == 0) error("zero denominator");
                return MPoly<Rational>::constant(Rational(num, den));
            }
            return MPoly<Rational>::constant(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                name += s[pos];
                advance();
            }
            int v = var_index(name);
            if (v < 0) error("unknown identifier '" + name + "'");
            return MPoly<Rational>::variable(v);
        }
        error(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }
};

} // namespace

MPoly<Rational> parse_poly(const std::string& text) {
    Parser p(text);
    MPoly<Rational> r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.error("trailing input");
    return r;
}

UPoly<Rational> parse_upoly_t(const std::string& text) {
    return to_upoly_t(parse_poly(text));
}

UPoly<Rational> to_upoly_t(const MPoly<Rational>& p) {
    std::vector<Rational> c(p.degree_in(kVarT) + 1, Rational(0));
    for (auto& [m, coef] : p.terms()) {
        for (int v = 0; v < kNumVars; ++v)
            if (v != kVarT && m[v] != 0)
                fail("ParseError", "expected a polynomial in t only, found " + var_name(v));
        c[m[kVarT]] = coef;
    }
    return UPoly<Rational>(std::move(c));
}

MPoly<Rational> from_upoly_t(const UPoly<Rational>& p, int var) {
    return lift_upoly<Rational>(p, var);
}

std::string upoly_to_string(const UPoly<Rational>& p, const std::string& var) {
    return p.str(var);
}

} // namespace hdc
