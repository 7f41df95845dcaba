#pragma once

#include "ahh/scalar.hpp"

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

namespace ahh::detail {

// Recursive-descent parser for  + - * ^ ( )  with integer and a/b literals.
// Ring supplies: constant(Scalar), operator+,-,*, unary -, and a pow via repeated product.
// `ident` maps an identifier to a ring element or throws.
template <class Ring>
class ExprParser {
public:
    using Ident = std::function<Ring(const std::string&, std::size_t)>;
    using Constant = std::function<Ring(const Scalar&)>;

    ExprParser(std::string_view text, Field f, Ident ident, Constant constant)
        : s_(text), f_(f), ident_(std::move(ident)), constant_(std::move(constant)) {}

    Ring parse() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
        Ring r = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return r;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Ring expr() {
        Ring acc = term();
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Ring term() {
        Ring acc = unary();
        while (eat('*')) acc = acc * unary();
        return acc;
    }

    Ring unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Ring power() {
        Ring base = atom();
        if (eat('^')) {
            skip();
            std::size_t at = pos_;
            std::string digits = read_digits();
            if (digits.empty()) throw ParseError("exponent must be a nonnegative integer", at);
            if (digits.size() > 6) throw ParseError("exponent too large", at);
            unsigned e = static_cast<unsigned>(std::stoul(digits));
            Ring r = constant_(Scalar(f_, 1));
            for (unsigned i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    std::string read_digits() {
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(b, pos_ - b));
    }

    Ring atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Ring r = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            mpz_class num(read_digits());
            mpz_class den = 1;
            std::size_t save = pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                std::string d = read_digits();
                if (d.empty()) throw ParseError("expected denominator", pos_);
                den = mpz_class(d);
            } else {
                pos_ = save;
            }
            try {
                return constant_(Scalar::fraction(f_, num, den));
            } catch (const DomainError& e) {
                throw ParseError(std::string("coefficient not in the active field: ") + e.what(), at);
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ident_(std::string(s_.substr(at, pos_ - at)), at);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Field f_;
    Ident ident_;
    Constant constant_;
};

}  // namespace ahh::detail
