#pragma once

// Polynomial expression parser:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | implicit)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'x' | '(' expr ')'
// Implicit multiplication is allowed right after a numeric literal ("2x",
// "3(x+1)"). Division is only by nonzero constants.

#include <cctype>
#include <string>
#include <string_view>

#include "error.hpp"
#include "poly.hpp"

namespace galoiskit {

namespace detail {

template <FieldDomain F>
class PolyParser {
public:
    PolyParser(std::string_view src, const F& field) : src_(src), K_(field) {}

    Poly<F> parse() {
        skip();
        if (pos_ == src_.size()) throw ParseError("empty polynomial", pos_);
        Poly<F> p = expr();
        skip();
        if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    Poly<F> expr() {
        Poly<F> acc = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc = acc + term();
            } else if (peek('-')) {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly<F> term() {
        Poly<F> acc = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * unary();
            } else if (peek('/')) {
                const std::size_t at = pos_++;
                Poly<F> d = unary();
                if (d.degree() > 0) throw ParseError("division by a non-constant", at);
                if (d.is_zero()) throw ParseError("division by zero", at);
                typename F::value_type inv;
                try {
                    inv = K_.inv(d.lc());
                } catch (const DomainError&) {
                    throw ParseError("division by zero in " + K_.name(), at);
                }
                acc = acc.scaled(inv);
            } else if (last_was_number_ && (peek('x') || peek('('))) {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    Poly<F> unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Poly<F> power() {
        Poly<F> base = primary();
        const bool number_base = last_was_number_;
        if (peek('^')) {
            ++pos_;
            skip();
            const std::size_t at = pos_;
            if (pos_ == src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError("exponent must be a nonnegative integer literal", at);
            const Int e = integer();
            if (e > 100000) throw ParseError("exponent too large", at);
            base = pow(base, e.get_ui());
        }
        last_was_number_ = number_base;
        return base;
    }

    Int integer() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return Int(std::string(src_.substr(start, pos_ - start)));
    }

    Poly<F> primary() {
        skip();
        last_was_number_ = false;
        if (pos_ == src_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Int v = integer();
            last_was_number_ = true;
            return Poly<F>::constant(K_, K_.from_rat(Rat(v)));
        }
        if (c == 'x') {
            ++pos_;
            return Poly<F>::x(K_);
        }
        if (c == '(') {
            ++pos_;
            Poly<F> inner = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view src_;
    F K_;
    std::size_t pos_ = 0;
    bool last_was_number_ = false;
};

} // namespace detail

template <FieldDomain F>
Poly<F> parse_poly(std::string_view src, const F& field) {
    return detail::PolyParser<F>(src, field).parse();
}

inline QPoly parse_qpoly(std::string_view src) { return parse_poly(src, RationalField{}); }

} // namespace galoiskit
