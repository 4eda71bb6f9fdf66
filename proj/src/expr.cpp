#include "pdcalc/expr.hpp"

#include <cctype>

#include "pdcalc/errors.hpp"

namespace pdcalc {
namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;
    const VarTable& vars;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Scalar expr() {
        Scalar acc = term();
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Scalar term() {
        Scalar acc = unary();
        while (eat('*')) acc *= unary();
        return acc;
    }

    Scalar unary() {
        if (eat('-')) return Scalar(0) - unary();
        return power();
    }

    Scalar power() {
        Scalar base = primary();
        if (!eat('^')) return base;
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer exponent", pos);
        int e = std::stoi(std::string(s.substr(start, pos - start)));
        Scalar acc(1);
        for (int i = 0; i < e; ++i) acc *= base;
        return acc;
    }

    Scalar primary() {
        skip_ws();
        if (pos >= s.size()) throw parse_error("unexpected end of expression", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Scalar v = expr();
            if (!eat(')')) throw parse_error("expected ')'", pos);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        throw parse_error(std::string("unexpected character '") + c + "'", pos);
    }

    Scalar number() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        Int num{std::string(s.substr(start, pos - start))};
        if (pos < s.size() && s[pos] == '/') {
            std::size_t save = pos++;
            std::size_t ds = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == ds) {
                pos = save; // '/' was not part of a rational literal
                return Scalar(Rational(num));
            }
            Int den{std::string(s.substr(ds, pos - ds))};
            if (den == 0) throw parse_error("zero denominator", ds);
            return Scalar(Rational(num, den));
        }
        return Scalar(Rational(num));
    }

    Scalar variable() {
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string name(s.substr(start, pos - start));
        if (!vars) throw parse_error("variable '" + name + "' in a purely numeric context", start);
        for (std::size_t i = 0; i < vars->size(); ++i)
            if ((*vars)[i] == name) return Scalar(MultiPoly::variable(vars, i));
        throw parse_error("unknown variable '" + name + "'", start);
    }
};

} // namespace

Scalar parse_scalar(std::string_view text, const VarTable& vars) {
    Parser p{text, 0, vars};
    Scalar v = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error("trailing input in expression", p.pos);
    return v;
}

} // namespace pdcalc
