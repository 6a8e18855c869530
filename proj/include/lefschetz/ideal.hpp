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

#ifndef LEFSCHETZ_IDEAL_HPP
#define LEFSCHETZ_IDEAL_HPP

#include <utility>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/hilbert.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

/// A homogeneous ideal in r variables over a field F, presented by explicit
/// generators of degree >= 1. All degreewise quantities (Hilbert functions,
/// colon dimensions, multiplication ranks) are ranks of slice matrices; no
/// Groebner machinery is involved.
template <class F>
class GradedIdeal {
public:
    GradedIdeal(F field, int r, std::vector<Polynomial<F>> generators)
        : field_(std::move(field)), r_(r), gens_(std::move(generators)) {
        if (r_ < 1) throw InvalidArgument("ideal needs at least one variable");
        for (const auto& g : gens_) {
            if (g.is_zero()) throw InvalidArgument("zero generator");
            if (g.var_count() != r_)
                throw InvalidArgument("generator variable count does not match");
            if (!(g.field() == field_))
                throw InvalidArgument("generator field does not match");
            if (g.degree() < 1)
                throw InvalidArgument("generators must have degree >= 1");
        }
    }

    const F& field() const { return field_; }
    int var_count() const { return r_; }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }

    bool is_monomial() const {
        for (const auto& g : gens_)
            if (!g.is_monomial()) return false;
        return true;
    }

    /// The ideal generated by this one together with one extra form.
    GradedIdeal with_form(const Polynomial<F>& f) const {
        auto gens = gens_;
        gens.push_back(f);
        return GradedIdeal(field_, r_, std::move(gens));
    }

private:
    F field_;
    int r_;
    std::vector<Polynomial<F>> gens_;
};

/// Spanning set of the degree-d slice I_d: all products m * g with g a
/// generator and m a monomial of degree d - deg(g). May be redundant.
template <class F>
std::vector<Polynomial<F>> ideal_slice_span(const GradedIdeal<F>& ideal,
                                            long long d) {
    std::vector<Polynomial<F>> span;
    for (const auto& g : ideal.generators()) {
        const long long rest = d - g.degree();
        if (rest < 0) continue;
        for (const Monomial& m : monomials_of_degree(ideal.var_count(), rest))
            span.push_back(g.times_monomial(m));
    }
    return span;
}

/// Coefficient matrix of the degree-d slice span: one column per spanning
/// polynomial on the monomial basis of R_d.
template <class F>
DenseMatrix<F> slice_matrix(const GradedIdeal<F>& ideal, long long d) {
    const auto basis = monomials_of_degree(ideal.var_count(), d);
    const auto span = ideal_slice_span(ideal, d);
    std::vector<std::vector<typename F::Element>> columns;
    columns.reserve(span.size());
    for (const auto& p : span) columns.push_back(p.coefficients_on(basis));
    return DenseMatrix<F>::from_columns(ideal.field(), basis.size(), columns);
}

/// dim I_d as a vector space.
template <class F>
long long slice_rank(const GradedIdeal<F>& ideal, long long d) {
    return rank(slice_matrix(ideal, d));
}

/// Whether a homogeneous form lies in the ideal's slice of its own degree.
template <class F>
bool in_ideal_slice(const GradedIdeal<F>& ideal, const Polynomial<F>& f) {
    if (f.is_zero()) return true;
    const long long d = f.degree();
    const auto basis = monomials_of_degree(ideal.var_count(), d);
    const auto slice = slice_matrix(ideal, d);
    const auto f_col = DenseMatrix<F>::from_columns(ideal.field(), basis.size(),
                                                    {f.coefficients_on(basis)});
    return rank_of_stacked(f_col, slice) == rank(slice);
}

/// Hilbert function of the quotient R/I: h_d = dim R_d - dim I_d, degree by
/// degree until the quotient vanishes. Throws NotArtinianByCap if no zero
/// occurs by the given degree cap.
template <class F>
HilbertFunction hilbert_function(const GradedIdeal<F>& ideal, long long cap) {
    if (cap < 1) throw InvalidArgument("degree cap must be >= 1");
    std::vector<long long> h;
    for (long long d = 0; d <= cap; ++d) {
        const long long dim = monomial_count(ideal.var_count(), d);
        const long long hd = dim - slice_rank(ideal, d);
        if (hd == 0) return HilbertFunction(std::move(h));
        h.push_back(hd);
    }
    throw NotArtinianByCap(cap);
}

/// dim (I : F)_i, the nullity of multiplication by F from R_i to the
/// quotient (R/I)_{i+d}. The form must not reduce to zero modulo I.
template <class F>
long long colon_slice_dim(const GradedIdeal<F>& ideal, const Polynomial<F>& f,
                          long long i) {
    if (i < 0) throw InvalidArgument("colon_slice_dim requires i >= 0");
    if (f.is_zero() || in_ideal_slice(ideal, f))
        throw FormInIdeal("the form reduces to zero modulo the ideal");
    const long long d = f.degree();
    const auto basis_i = monomials_of_degree(ideal.var_count(), i);
    const auto basis_target = monomials_of_degree(ideal.var_count(), i + d);
    std::vector<std::vector<typename F::Element>> columns;
    columns.reserve(basis_i.size());
    for (const Monomial& m : basis_i)
        columns.push_back(f.times_monomial(m).coefficients_on(basis_target));
    const auto image = DenseMatrix<F>::from_columns(ideal.field(),
                                                    basis_target.size(), columns);
    const auto slice = slice_matrix(ideal, i + d);
    const long long image_rank_mod_ideal =
        rank_of_stacked(image, slice) - rank(slice);
    return static_cast<long long>(basis_i.size()) - image_rank_mod_ideal;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_IDEAL_HPP
