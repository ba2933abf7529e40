#include "ahm6/parse.hpp"

#include <cctype>

namespace ahm6 {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

Rat parse_coeff(Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    if (c.pos == start) throw ParseError("expected a number", start);
    std::string num = c.s.substr(start, c.pos - start);
    if (c.peek() == '/') {
        ++c.pos;
        c.skip_ws();
        size_t dstart = c.pos;
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
        if (c.pos == dstart) throw ParseError("expected a denominator", dstart);
        std::string den = c.s.substr(dstart, c.pos - dstart);
        if (den == "0") throw ParseError("zero denominator", dstart);
        return rat_parse(num + "/" + den);
    }
    return rat_parse(num);
}

// [coeff *] e<digits>
std::pair<Blade, Rat> parse_term(Cursor& c, int dim) {
    Rat coeff(1);
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = parse_coeff(c);
        if (c.peek() != '*') throw ParseError("expected '*' after coefficient", c.pos);
        ++c.pos;
    }
    if (c.peek() != 'e') throw ParseError("expected a blade like e123", c.pos);
    ++c.pos;
    size_t start = c.pos;
    Blade b = 0;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        int idx = c.s[c.pos] - '0';
        if (idx < 1 || idx > dim) throw ParseError("blade index out of range", c.pos);
        Blade bit = blade_bit(idx);
        if (b & bit) throw ParseError("repeated blade index", c.pos);
        if (b >= bit) throw ParseError("blade indices must increase", c.pos);
        b |= bit;
        ++c.pos;
    }
    if (c.pos == start) throw ParseError("empty blade", start);
    return {b, coeff};
}

} // namespace

KForm parse_form(const std::string& text, int dim) {
    Cursor c{text};
    if (c.done()) throw ParseError("empty expression", 0);
    if (c.peek() == '0') {
        ++c.pos;
        if (!c.done()) throw ParseError("unexpected input after the zero form", c.pos);
        return KForm(dim, 0);
    }
    KForm out(dim, 0);
    bool first = true;
    int grade = -1;
    while (!c.done()) {
        int sign = 1;
        char p = c.peek();
        if (p == '+' || p == '-') {
            sign = p == '-' ? -1 : 1;
            ++c.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", c.pos);
        }
        auto [b, coeff] = parse_term(c, dim);
        int g = blade_grade(b);
        if (grade < 0) {
            grade = g;
            out = KForm(dim, g);
        } else if (g != grade) {
            throw ParseError("mixed grades in one expression", c.pos);
        }
        out.add_term(b, sign > 0 ? coeff : -coeff);
        first = false;
    }
    return out;
}

} // namespace ahm6
