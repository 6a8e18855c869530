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

#ifndef LEFSCHETZ_MACAULAY_HPP
#define LEFSCHETZ_MACAULAY_HPP

#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/integers.hpp"

namespace lefschetz {

/// Binomial coefficient C(m, n) under the extended convention
/// C(m, n) = 0 whenever m < n or n < 0.
inline Int binom_ext(const Int& m, const Int& n) {
    if (n < 0 || m < n) return 0;
    Int k = n;
    if (m - n < k) k = m - n;
    const auto steps = k.convert_to<unsigned long long>();
    Int result = 1;
    for (unsigned long long t = 0; t < steps; ++t) {
        result *= m - t;
        result /= t + 1;  // exact: product of t+1 consecutive integers
    }
    return result;
}

/// One summand C(top, bottom) of a binomial expansion.
struct ExpansionTerm {
    Int top;           // n_k
    long long bottom;  // k
    bool operator==(const ExpansionTerm&) const = default;
};

/// The d-binomial expansion of a positive integer n:
///
///   n = C(n_d, d) + C(n_{d-1}, d-1) + ... + C(n_j, j),
///
/// with n_d > n_{d-1} > ... > n_j >= j >= 1. Bottoms run consecutively
/// from d down to j and the decomposition is unique.
class BinomialExpansion {
public:
    BinomialExpansion(long long degree, std::vector<ExpansionTerm> terms)
        : degree_(degree), terms_(std::move(terms)) {}

    long long degree() const { return degree_; }
    const std::vector<ExpansionTerm>& terms() const { return terms_; }

    /// The lowest bottom index j.
    long long lowest_bottom() const { return terms_.back().bottom; }

    /// Reconstructs the expanded integer.
    Int value() const {
        Int sum = 0;
        for (const auto& t : terms_) sum += binom_ext(t.top, t.bottom);
        return sum;
    }

    bool operator==(const BinomialExpansion&) const = default;

private:
    long long degree_;
    std::vector<ExpansionTerm> terms_;
};

namespace detail {

/// Largest m >= k with C(m, k) <= n, for n >= 1 and k >= 1.
inline Int largest_top(const Int& n, long long k) {
    if (k == 1) return n;  // C(m, 1) = m
    Int lo = k;            // C(k, k) = 1 <= n
    Int hi = k + 1;
    while (binom_ext(hi, k) <= n) {
        lo = hi;
        hi *= 2;
    }
    // invariant: C(lo, k) <= n < C(hi, k)
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (binom_ext(mid, k) <= n) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace detail

/// The unique d-binomial expansion of n (greedy: the top of each summand is
/// the largest feasible one, descending through consecutive bottoms).
inline BinomialExpansion binomial_expand(const Int& n, long long d) {
    if (n <= 0) throw InvalidArgument("binomial expansion requires n >= 1");
    if (d <= 0) throw InvalidArgument("binomial expansion requires d >= 1");
    std::vector<ExpansionTerm> terms;
    Int rest = n;
    for (long long k = d; rest > 0; --k) {
        Int top = detail::largest_top(rest, k);
        if (!terms.empty() && top >= terms.back().top)
            throw Error("binomial expansion lost strict top decrease");
        terms.push_back({top, k});
        rest -= binom_ext(top, k);
    }
    return BinomialExpansion(d, std::move(terms));
}

/// The shifted evaluation (n_(d))^a_b = sum of C(n_k + a, k + b) over the
/// expansion's summands.
inline Int shift(const BinomialExpansion& expansion, long long a, long long b) {
    Int sum = 0;
    for (const auto& t : expansion.terms())
        sum += binom_ext(t.top + a, Int(t.bottom) + b);
    return sum;
}

/// The operator n_((d,c)) for 0 <= c < d:
///
///   sum_{k=q}^{d} C(n_k - c - 1, k - c) + T,
///
/// where j is the lowest bottom of the d-binomial expansion of n,
/// q = j when j > c and q = c + 1 when j <= c, and the trailing term
/// T = C(n_c - c, 0) is present only when c >= j.
inline Int double_bracket(const Int& n, long long d, long long c) {
    if (c < 0 || c >= d)
        throw InvalidArgument("double_bracket requires 0 <= c < d");
    const BinomialExpansion expansion = binomial_expand(n, d);
    const long long j = expansion.lowest_bottom();
    const long long q = (j > c) ? j : c + 1;
    Int sum = 0;
    for (const auto& t : expansion.terms()) {
        if (t.bottom >= q) sum += binom_ext(t.top - c - 1, t.bottom - c);
        if (c >= j && t.bottom == c) sum += binom_ext(t.top - c, 0);
    }
    return sum;
}

/// Macaulay's growth bound: the largest value admissible in degree d + 1
/// after the value n in degree d, i.e. (n_(d))^{+1}_{+1}, with 0 for n = 0.
inline Int macaulay_next_max(const Int& n, long long d) {
    if (d <= 0) throw InvalidArgument("macaulay_next_max requires d >= 1");
    if (n < 0) throw InvalidArgument("macaulay_next_max requires n >= 0");
    if (n == 0) return 0;
    return shift(binomial_expand(n, d), 1, 1);
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_MACAULAY_HPP
