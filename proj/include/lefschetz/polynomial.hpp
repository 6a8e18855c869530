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

#ifndef LEFSCHETZ_POLYNOMIAL_HPP
#define LEFSCHETZ_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/fields.hpp"
#include "lefschetz/monomial.hpp"

namespace lefschetz {

/// A homogeneous polynomial with exact coefficients over a field F.
/// Zero coefficients are never stored; the zero polynomial has no terms.
/// Terms iterate in descending lex order.
template <class F>
class Polynomial {
public:
    using Element = typename F::Element;
    using TermMap = std::map<Monomial, Element, DescendingLex>;

    /// The zero polynomial in r variables.
    Polynomial(F field, int r) : field_(std::move(field)), r_(r) {}

    /// Builds a polynomial from (monomial, coefficient) pairs. Coefficients
    /// for equal monomials accumulate; zero coefficients drop out; the
    /// surviving terms must share one degree.
    static Polynomial make(F field, int r,
                           const std::vector<std::pair<Monomial, Element>>& terms) {
        Polynomial p(std::move(field), r);
        for (const auto& [mon, coeff] : terms) p.add_term(mon, coeff);
        p.check_homogeneous();
        return p;
    }

    static Polynomial monomial_term(F field, const Monomial& m, Element coeff) {
        Polynomial p(field, m.var_count());
        p.add_term(m, std::move(coeff));
        return p;
    }

    /// c_1 x_1 + ... + c_r x_r.
    static Polynomial linear_form(F field, const std::vector<Element>& coeffs) {
        Polynomial p(field, static_cast<int>(coeffs.size()));
        const int r = static_cast<int>(coeffs.size());
        for (int k = 1; k <= r; ++k)
            p.add_term(Monomial::variable_power(r, k, 1),
                       coeffs[static_cast<std::size_t>(k - 1)]);
        return p;
    }

    const F& field() const { return field_; }
    int var_count() const { return r_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Degree of a nonzero homogeneous polynomial.
    long long degree() const {
        if (is_zero()) throw InvalidArgument("zero polynomial has no degree");
        return terms_.begin()->first.degree();
    }

    bool is_monomial() const { return terms_.size() == 1; }

    Polynomial times_monomial(const Monomial& m) const {
        Polynomial p(field_, r_);
        for (const auto& [mon, coeff] : terms_) p.terms_.emplace(mon.times(m), coeff);
        return p;
    }

    Polynomial times(const Polynomial& other) const {
        Polynomial p(field_, r_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : other.terms_)
                p.add_term(ma.times(mb), field_.mul(ca, cb));
        return p;
    }

    Polynomial pow(long long k) const {
        if (k < 1) throw InvalidArgument("polynomial power requires k >= 1");
        Polynomial acc = *this;
        for (long long i = 1; i < k; ++i) acc = acc.times(*this);
        return acc;
    }

    /// Coefficient column on an ordered monomial basis.
    std::vector<Element> coefficients_on(const std::vector<Monomial>& basis) const {
        std::vector<Element> column;
        column.reserve(basis.size());
        for (const Monomial& m : basis) {
            auto it = terms_.find(m);
            column.push_back(it == terms_.end() ? field_.zero() : it->second);
        }
        return column;
    }

    bool operator==(const Polynomial& other) const {
        return r_ == other.r_ && field_ == other.field_ && terms_ == other.terms_;
    }

    /// Grammar-compatible rendering, e.g. "x1^2 - 3*x2*x3".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [mon, coeff] : terms_) {
            std::string c = field_.to_string(coeff);
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c.erase(0, 1);
            if (out.empty()) {
                if (negative) out += '-';
            } else {
                out += negative ? " - " : " + ";
            }
            const std::string ms = mon.to_string();
            if (c == "1" && ms != "1") {
                out += ms;
            } else if (ms == "1") {
                out += c;
            } else {
                out += c + '*' + ms;
            }
        }
        return out;
    }

private:
    void add_term(const Monomial& m, Element coeff) {
        if (m.var_count() != r_)
            throw InvalidArgument("monomial variable count does not match");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!field_.is_zero(coeff)) terms_.emplace(m, std::move(coeff));
            return;
        }
        it->second = field_.add(it->second, coeff);
        if (field_.is_zero(it->second)) terms_.erase(it);
    }

    void check_homogeneous() const {
        if (terms_.empty()) return;
        const long long d = terms_.begin()->first.degree();
        for (const auto& [mon, coeff] : terms_)
            if (mon.degree() != d)
                throw NotHomogeneous("terms of unequal degree: " + to_string());
    }

    F field_;
    int r_;
    TermMap terms_;
};

}  // namespace lefschetz

#endif  // LEFSCHETZ_POLYNOMIAL_HPP
