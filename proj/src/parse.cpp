#include "macbinom/parse.hpp"

#include "macbinom/vars.hpp"

#include <cctype>

namespace macbinom {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what + " at position " + std::to_string(pos));
    }

    FieldElement expr() {
        FieldElement v = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    FieldElement term() {
        FieldElement v = unary();
        for (;;) {
            if (eat('*'))
                v = v * unary();
            else if (eat('/'))
                v = v / unary();
            else
                return v;
        }
    }

    FieldElement unary() { return eat('-') ? -unary() : power(); }

    FieldElement power() {
        FieldElement b = atom();
        if (eat('^')) {
            bool neg = eat('-');
            skip();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected integer exponent");
            long e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                e = e * 10 + (s[pos] - '0');
                if (e > 30000) fail("exponent too large");
                ++pos;
            }
            return b.pow(static_cast<int>(neg ? -e : e));
        }
        return b;
    }

    FieldElement atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FieldElement v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits += s[pos++];
            return FieldElement::from_rat(Rat(Int(digits)));
        }
        // identifier: ascii letters/digits, or the UTF-8 theta glyph
        std::string name;
        while (pos < s.size()) {
            unsigned char u = static_cast<unsigned char>(s[pos]);
            if (std::isalnum(u) || u >= 0x80) {
                name += s[pos++];
            } else {
                break;
            }
        }
        if (name.empty()) fail("unexpected character");
        int id = vars::id_of(name);
        if (id < 0) fail("unknown variable '" + name + "'");
        return FieldElement::var(id);
    }
};

}  // namespace

FieldElement parse_field_expression(const std::string& text) {
    Parser p(text);
    FieldElement v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace macbinom
