#include "planemap/parse.hpp"

#include <cctype>

namespace planemap {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Variables& vars, bool allow_laurent)
        : text_(text), vars_(vars), allow_laurent_(allow_laurent) {}

    Poly parse() {
        skip_space();
        if (at_end()) throw ParseError("empty expression", pos_);
        Poly p = expr();
        skip_space();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Poly expr() {
        skip_space();
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = peek() == '-';
            ++pos_;
        }
        Poly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Poly t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_space();
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= factor();
            } else if (c == '/') {
                const std::size_t at = ++pos_;
                Poly d = factor();
                if (!d.is_constant()) throw ParseError("division by a non-constant", at);
                if (d.is_zero()) throw ParseError("division by zero", at);
                acc *= d.constant_term().inverse();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        skip_space();
        if (peek() != '^') return base;
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("non-integer exponent", at);
        long n = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            n = n * 10 + (text_[pos_++] - '0');
            if (n > 100000) throw ParseError("exponent too large", at);
        }
        if (peek() == '.' || std::isalpha(static_cast<unsigned char>(peek())))
            throw ParseError("non-integer exponent", at);
        if (!negative) return base.pow(static_cast<unsigned>(n));
        if (!allow_laurent_) throw ParseError("negative exponent outside Laurent mode", at);
        if (base.size() != 1) throw ParseError("negative exponent on a non-monomial", at);
        const auto& [e, c] = base.leading_term();
        Exponents inv;
        for (int k = 0; k < kNumVars; ++k) inv[k] = -e[k] * static_cast<int>(n);
        return Poly::monomial(inv, pow(c.inverse(), static_cast<unsigned>(n)));
    }

    Poly primary() {
        skip_space();
        const std::size_t at = pos_;
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            skip_space();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
            if (peek() == '.') throw ParseError("non-integer literal", pos_);
            Integer value(digits);
            if (peek() == 'i' && !ident_continues(pos_ + 1)) {
                ++pos_;
                return Poly(GaussianRational(GaussianInt(0, value)));
            }
            return Poly(GaussianRational(GaussianInt(value)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += text_[pos_++];
            if (name == vars_.first) return Poly::variable(vars_.first_slot);
            if (name == vars_.second) return Poly::variable(vars_.second_slot);
            if (name == "i") return Poly(GaussianRational(GaussianInt::i()));
            throw ParseError("unknown variable '" + name + "'", at);
        }
        if (at_end()) throw ParseError("unexpected end of input", at);
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    bool ident_continues(std::size_t p) const {
        return p < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_');
    }

    std::string_view text_;
    const Variables& vars_;
    bool allow_laurent_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_expression(std::string_view text, const Variables& vars, bool allow_laurent) {
    return Parser(text, vars, allow_laurent).parse();
}

}  // namespace planemap
