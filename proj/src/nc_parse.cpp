#include "ajpoly/ncpoly.hpp"

#include <cctype>

namespace ajpoly {

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(pos, std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') neg ^= accept('-') ? true : (accept('+'), false);
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start) throw ParseError(pos, "expected integer");
        long val = std::stol(std::string(text.substr(start, pos - start)));
        return neg ? -val : val;
    }

    // exponent: integer, or (integer), or for q: (k/2)
    // returns the v-exponent multiplier relative to q: caller interprets
    std::pair<long, bool> parse_exponent_q() {  // (v-power, was_half)
        expect('^');
        if (accept('(')) {
            long k = parse_int();
            bool half = false;
            if (accept('/')) {
                long d = parse_int();
                if (d != 2) throw ParseError(pos, "only half-integer q-powers supported");
                half = true;
            }
            expect(')');
            return {half ? k : 2 * k, true};
        }
        long k = parse_int();
        return {2 * k, false};
    }

    int parse_exponent_var() {
        expect('^');
        if (accept('(')) {
            long k = parse_int();
            expect(')');
            return (int)k;
        }
        return (int)parse_int();
    }

    NCPoly parse_atom() {
        skip_ws();
        if (accept('(')) {
            NCPoly e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit((unsigned char)peek())) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
            mpz_class c(std::string(text.substr(start, pos - start)));
            return NCPoly::scalar(VLaurent::mono(0, c));
        }
        // q before generator names (none start with q)
        if (accept_word("q")) {
            long vexp = 2;
            if (peek() == '^') vexp = parse_exponent_q().first;
            return NCPoly::scalar(VLaurent::mono(vexp));
        }
        static const std::pair<const char*, int> vars[] = {
            {"mx", 0}, {"lx", 1}, {"my", 2}, {"ly", 3}};
        for (auto& [name, idx] : vars) {
            if (accept_word(name)) {
                int e = 1;
                if (peek() == '^') e = parse_exponent_var();
                NCMono m{};
                (idx == 0 ? m.a : idx == 1 ? m.b : idx == 2 ? m.c : m.d) = e;
                return NCPoly::term(m, VLaurent::mono(0, 1));
            }
        }
        throw ParseError(pos, "unknown symbol");
    }

    NCPoly parse_factor() {
        skip_ws();
        if (accept('-')) return -parse_factor();
        if (accept('+')) return parse_factor();
        return parse_atom();
    }

    NCPoly parse_term() {
        NCPoly e = parse_factor();
        while (peek() == '*') {
            accept('*');
            e = nc_mul(e, parse_factor());
        }
        return e;
    }

    NCPoly parse_expr() {
        NCPoly e = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                accept('+');
                e = e + parse_term();
            } else if (c == '-') {
                accept('-');
                e = e - parse_term();
            } else {
                break;
            }
        }
        return e;
    }
};

}  // namespace

NCPoly nc_parse(std::string_view text) {
    Parser p{text};
    NCPoly e = p.parse_expr();
    if (!p.eof()) throw ParseError(p.pos, "trailing input");
    return e;
}

}  // namespace ajpoly
