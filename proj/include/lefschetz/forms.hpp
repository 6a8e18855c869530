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

#ifndef LEFSCHETZ_FORMS_HPP
#define LEFSCHETZ_FORMS_HPP

#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/polynomial.hpp"
#include "lefschetz/rng.hpp"

namespace lefschetz {

/// x_1 + x_2 + ... + x_r.
template <class F>
Polynomial<F> all_ones_linear(const F& field, int r) {
    std::vector<typename F::Element> coeffs(static_cast<std::size_t>(r),
                                            field.one());
    return Polynomial<F>::linear_form(field, coeffs);
}

/// x_r^d.
template <class F>
Polynomial<F> last_variable_power(const F& field, int r, long long d) {
    return Polynomial<F>::monomial_term(
        field, Monomial::variable_power(r, r, static_cast<int>(d)), field.one());
}

namespace detail {

template <class F>
typename F::Element random_coefficient(const F& field, Rng& rng,
                                       long long bound) {
    if (field.characteristic() == 0)
        return field.from_integer(Int(rng.uniform(-bound, bound)));
    return field.from_integer(Int(rng.uniform(0, field.characteristic() - 1)));
}

}  // namespace detail

/// A random nonzero form of degree d with a coefficient drawn for every
/// monomial (full support in the sampling sense; individual draws may be 0).
template <class F>
Polynomial<F> random_form(const F& field, int r, long long d, Rng& rng,
                          long long bound) {
    const auto basis = monomials_of_degree(r, d);
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<std::pair<Monomial, typename F::Element>> terms;
        terms.reserve(basis.size());
        for (const Monomial& m : basis)
            terms.emplace_back(m, detail::random_coefficient(field, rng, bound));
        Polynomial<F> p = Polynomial<F>::make(field, r, terms);
        if (!p.is_zero()) return p;
    }
    throw Error("failed to sample a nonzero form");
}

template <class F>
Polynomial<F> random_linear(const F& field, int r, Rng& rng, long long bound) {
    return random_form(field, r, 1, rng, bound);
}

/// Number of degree-d forms in r variables over F_p up to scalar,
/// (p^N - 1)/(p - 1) with N = dim R_d.
inline Int projective_form_count(long long p, int r, long long d) {
    const long long n = monomial_count(r, d);
    Int count = 0;
    Int power = 1;
    for (long long k = 0; k < n; ++k) {
        count += power;  // accumulates 1 + p + ... + p^{N-1}
        power *= p;
    }
    return count;
}

/// All nonzero degree-d forms over F_p up to scalar (first nonzero
/// coefficient normalized to 1), in a fixed deterministic order. Throws
/// ExhaustiveTooLarge when the enumeration would exceed `budget` forms.
inline std::vector<Polynomial<PrimeField>> enumerate_projective_forms(
    const PrimeField& field, int r, long long d, long long budget) {
    const long long p = field.characteristic();
    const Int count = projective_form_count(p, r, d);
    if (count > budget)
        throw ExhaustiveTooLarge("enumerating " + count.str() + " forms of degree " +
                                 std::to_string(d) + " over F_" + std::to_string(p) +
                                 " exceeds the budget of " + std::to_string(budget));
    const auto basis = monomials_of_degree(r, d);
    const std::size_t n = basis.size();
    std::vector<Polynomial<PrimeField>> forms;
    forms.reserve(count.convert_to<std::size_t>());
    for (std::size_t lead = 0; lead < n; ++lead) {
        // leading coefficient normalized to 1, positions after `lead` free
        const std::size_t free_count = n - lead - 1;
        std::vector<long long> free(free_count, 0);
        while (true) {
            std::vector<std::pair<Monomial, long long>> terms;
            terms.emplace_back(basis[lead], 1);
            for (std::size_t k = 0; k < free_count; ++k)
                if (free[k] != 0) terms.emplace_back(basis[lead + 1 + k], free[k]);
            forms.push_back(Polynomial<PrimeField>::make(field, r, terms));
            std::size_t idx = 0;
            while (idx < free_count && ++free[idx] == p) free[idx++] = 0;
            if (idx == free_count) break;
        }
    }
    return forms;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_FORMS_HPP
