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

#ifndef LEFSCHETZ_LEX_SEGMENT_HPP
#define LEFSCHETZ_LEX_SEGMENT_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "lefschetz/classify.hpp"
#include "lefschetz/ideal.hpp"

namespace lefschetz {

/// The lex-segment ideal realizing an artinian O-sequence H, in r = h_1
/// variables: in each degree d the slice is spanned by the first
/// dim R_d - h_d monomials in descending lex order. The returned generator
/// list is minimal (a segment monomial is a generator exactly when it is
/// not a variable multiple of the previous segment) and runs through degree
/// e + 1, where the slice becomes all of R_{e+1}.
template <class F>
GradedIdeal<F> lex_segment_ideal(const HilbertFunction& h, const F& field) {
    if (!is_o_sequence(h))
        throw NotAnOSequence("not an O-sequence: " + h.to_string());
    const long long r_ll = h.codimension();
    if (r_ll < 1)
        throw InvalidArgument(
            "lex-segment construction needs h_1 >= 1 (got the sequence " +
            h.to_string() + ")");
    const int r = static_cast<int>(r_ll);
    const long long e = h.socle_degree();

    std::vector<Polynomial<F>> gens;
    std::vector<Monomial> previous_segment;
    for (long long d = 1; d <= e + 1; ++d) {
        const auto basis = monomials_of_degree(r, d);
        const long long segment_size =
            static_cast<long long>(basis.size()) - h[d];
        std::set<Monomial, DescendingLex> shadow;
        for (const Monomial& m : previous_segment)
            for (int k = 1; k <= r; ++k)
                shadow.insert(m.times(Monomial::variable_power(r, k, 1)));
        std::vector<Monomial> segment(basis.begin(),
                                      basis.begin() + segment_size);
        for (const Monomial& m : segment)
            if (!shadow.count(m))
                gens.push_back(
                    Polynomial<F>::monomial_term(field, m, field.one()));
        // Macaulay growth guarantees the shadow sits inside the segment.
        for (const Monomial& m : shadow)
            if (!std::count(segment.begin(), segment.end(), m))
                throw Error("lex-segment shadow escaped its segment");
        previous_segment = std::move(segment);
    }
    return GradedIdeal<F>(field, r, std::move(gens));
}

namespace detail {

template <class F>
std::vector<Monomial> monomial_generators(const GradedIdeal<F>& ideal) {
    if (!ideal.is_monomial())
        throw NotMonomialIdeal("stability is defined for monomial ideals");
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators())
        gens.push_back(g.terms().begin()->first);
    return gens;
}

inline bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens) {
    for (const Monomial& g : gens)
        if (g.divides(m)) return true;
    return false;
}

/// Runs an exchange-closure predicate over every monomial of the ideal in
/// degrees up to the largest generator degree; closure propagates from
/// there to all higher slices.
template <class F, class Check>
bool slices_closed_under(const GradedIdeal<F>& ideal, Check&& check) {
    const auto gens = monomial_generators(ideal);
    long long max_degree = 0;
    for (const Monomial& g : gens) max_degree = std::max(max_degree, g.degree());
    for (long long d = 1; d <= max_degree; ++d)
        for (const Monomial& m : monomials_of_degree(ideal.var_count(), d))
            if (divisible_by_any(m, gens) && !check(m, gens)) return false;
    return true;
}

}  // namespace detail

/// Stability: for every monomial m of I, moving one factor x_{max(m)} to any
/// smaller variable stays inside I.
template <class F>
bool is_stable(const GradedIdeal<F>& ideal) {
    return detail::slices_closed_under(
        ideal, [](const Monomial& m, const std::vector<Monomial>& gens) {
            const int top = m.max_var();
            for (int i = 1; i < top; ++i)
                if (!detail::divisible_by_any(m.exchange(top, i), gens))
                    return false;
            return true;
        });
}

/// Strong stability: for every monomial m of I and every variable x_j
/// dividing m, moving one factor x_j to any smaller variable stays inside I.
template <class F>
bool is_strongly_stable(const GradedIdeal<F>& ideal) {
    return detail::slices_closed_under(
        ideal, [](const Monomial& m, const std::vector<Monomial>& gens) {
            for (int j = 2; j <= m.var_count(); ++j) {
                if (m.exponent(j) == 0) continue;
                for (int i = 1; i < j; ++i)
                    if (!detail::divisible_by_any(m.exchange(j, i), gens))
                        return false;
            }
            return true;
        });
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_LEX_SEGMENT_HPP
