/*
   Copyright 2026 The lecycle Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lecycle/parse.hpp"

#include <cctype>
#include <limits>

#include "lecycle/errors.hpp"

namespace lecycle {

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Polynomial parse_all() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            skip_space();
            std::size_t at = pos_;
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                Polynomial d = unary();
                if (!d.is_constant() || d.is_zero())
                    throw ParseError("division only by nonzero constants", at);
                try {
                    acc = acc.scaled(d.constant_term().inverse());
                } catch (const std::domain_error&) {
                    throw ParseError("division by a constant that vanishes in " + ring_->field().name(), at);
                }
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            skip_space();
            std::size_t digits_at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("exponent must be a nonnegative integer", pos_);
            mpz_class e = integer_literal();
            if (e > std::numeric_limits<std::uint32_t>::max())
                throw ExponentOverflow("exponent " + e.get_str() + " at position " + std::to_string(digits_at) +
                                       " exceeds 2^32-1");
            base = base.pow(static_cast<std::uint32_t>(e.get_ui()));
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '^')
                throw ParseError("chained exponents need parentheses", pos_);
        }
        return base;
    }

    mpz_class integer_literal() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Polynomial primary() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = integer_literal();
            return Polynomial::constant(ring_, Coefficient(ring_->field(), v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (!ring_->find(name)) throw UnknownVariable(name);
            return Polynomial::variable(ring_, name);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse_all(); }

Polynomial parse(std::string_view text, const std::vector<std::string>& variables, Field field) {
    return parse(text, make_ring(variables, field));
}

std::vector<std::string> split_variable_list(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

} // namespace lecycle
