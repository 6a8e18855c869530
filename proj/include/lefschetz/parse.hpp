/*
   Copyright 2026 The lefschetz library developers

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

#ifndef LEFSCHETZ_PARSE_HPP
#define LEFSCHETZ_PARSE_HPP

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

namespace detail {

/// Cursor over polynomial text. Terms are separated by + or -; a term is an
/// optional integer coefficient followed by optional *-separated factors
/// "xK" or "xK^E"; whitespace is insignificant.
class PolynomialParser {
public:
    PolynomialParser(const std::string& text, int r) : text_(text), r_(r) {}

    /// Accumulated (monomial, signed integer coefficient) pairs.
    std::vector<std::pair<Monomial, Int>> run() {
        std::vector<std::pair<Monomial, Int>> terms;
        skip_ws();
        if (done()) throw SyntaxError("empty polynomial", pos_);
        int sign = consume_sign_optional();
        while (true) {
            terms.push_back(parse_term(sign));
            skip_ws();
            if (done()) break;
            sign = consume_sign_required();
        }
        return terms;
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    int consume_sign_optional() {
        if (!done() && (peek() == '+' || peek() == '-')) {
            const int s = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
            return s;
        }
        return 1;
    }

    int consume_sign_required() {
        if (peek() == '+' || peek() == '-') {
            const int s = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
            return s;
        }
        throw SyntaxError("expected '+' or '-' between terms", pos_);
    }

    Int parse_integer() {
        const std::size_t start = pos_;
        std::string digits;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            ++pos_;
        }
        if (digits.empty()) throw SyntaxError("expected an integer", start);
        return Int(digits);
    }

    std::pair<Monomial, Int> parse_term(int sign) {
        Int coeff = 1;
        Monomial mon = Monomial::one(r_);
        bool saw_anything = false;
        if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_integer();
            saw_anything = true;
            skip_ws();
            if (!done() && peek() == '*') {
                ++pos_;
                skip_ws();
                mon = mon.times(parse_factor());
                saw_anything = true;
            }
        } else if (!done() && peek() == 'x') {
            mon = mon.times(parse_factor());
            saw_anything = true;
        }
        if (!saw_anything)
            throw SyntaxError("expected a coefficient or a variable", pos_);
        skip_ws();
        while (!done() && peek() == '*') {
            ++pos_;
            skip_ws();
            mon = mon.times(parse_factor());
            skip_ws();
        }
        return {mon, sign < 0 ? Int(-coeff) : coeff};
    }

    Monomial parse_factor() {
        if (done() || peek() != 'x')
            throw SyntaxError("expected a variable factor 'xK'", pos_);
        const std::size_t start = pos_;
        ++pos_;
        skip_ws();
        const Int index = parse_integer();
        if (index < 1 || index > r_)
            throw UnknownVariable("unknown variable x" + index.str() +
                                  " (expected x1..x" + std::to_string(r_) +
                                  ", at position " + std::to_string(start) + ")");
        int exponent = 1;
        skip_ws();
        if (!done() && peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t exp_pos = pos_;
            const Int e = parse_integer();
            if (e < 1) throw SyntaxError("exponent must be >= 1", exp_pos);
            if (e > 1000000) throw SyntaxError("exponent too large", exp_pos);
            exponent = e.convert_to<int>();
        }
        return Monomial::variable_power(r_, index.convert_to<int>(), exponent);
    }

    const std::string& text_;
    int r_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses polynomial text in r variables over the given field. Coefficients
/// are integers interpreted in the field (reduced mod p over a prime field).
/// The result must be homogeneous and nonzero.
template <class F>
Polynomial<F> parse_polynomial(const std::string& text, int r, const F& field) {
    if (r < 1) throw InvalidArgument("parse_polynomial requires r >= 1");
    detail::PolynomialParser parser(text, r);
    std::vector<std::pair<Monomial, typename F::Element>> terms;
    for (auto& [mon, coeff] : parser.run())
        terms.emplace_back(mon, field.from_integer(coeff));
    Polynomial<F> p = Polynomial<F>::make(field, r, terms);
    if (p.is_zero())
        throw ZeroPolynomial("all terms vanish in \"" + text + "\"");
    return p;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_PARSE_HPP
