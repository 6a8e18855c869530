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

#ifndef LEFSCHETZ_CLASSIFY_HPP
#define LEFSCHETZ_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/hilbert.hpp"
#include "lefschetz/macaulay.hpp"

namespace lefschetz {

/// Why a forcing predicate failed.
enum class Obstruction {
    none,              // the predicate holds
    growth_condition,  // h_{i-1} != ((h_i)_(i))^{-1}_{-1} at failing_index
    socle_width,       // h_t > 2 with more than two variables
};

/// Outcome of a forcing classification. `forces` is true exactly when no
/// obstruction was found; `failing_index` is set only for the
/// growth-condition obstruction.
struct ForcingVerdict {
    bool forces = false;
    Obstruction obstruction = Obstruction::none;
    std::optional<long long> failing_index;

    bool operator==(const ForcingVerdict&) const = default;
};

inline std::string to_string(Obstruction o) {
    switch (o) {
        case Obstruction::none: return "none";
        case Obstruction::growth_condition: return "growth-condition";
        case Obstruction::socle_width: return "socle-width";
    }
    return "none";
}

namespace detail {

inline void require_o_sequence(const HilbertFunction& h) {
    if (!is_o_sequence(h))
        throw NotAnOSequence("not an O-sequence: " + h.to_string());
}

/// First index i in 1..t-1 where h_{i-1} != ((h_i)_(i))^{-1}_{-1}, if any.
inline std::optional<long long> first_growth_failure(const HilbertFunction& h) {
    const long long t = t_index(h);
    for (long long i = 1; i < t; ++i) {
        // h_i > i >= 1 here, so the expansion exists.
        if (Int(h[i - 1]) != shift(binomial_expand(Int(h[i]), i), -1, -1))
            return i;
    }
    return std::nullopt;
}

}  // namespace detail

/// Whether every artinian algebra with Hilbert function H has the weak
/// Lefschetz property: h_{i-1} = ((h_i)_(i))^{-1}_{-1} for i = 1..t-1,
/// where t is the smallest index with h_t <= t.
///
/// Throws NotAnOSequence for inputs that are not O-sequences ("forces"
/// quantifies over algebras with that Hilbert function, which must exist).
inline ForcingVerdict forces_wlp(const HilbertFunction& h) {
    detail::require_o_sequence(h);
    if (auto i = detail::first_growth_failure(h))
        return {false, Obstruction::growth_condition, i};
    return {true, Obstruction::none, std::nullopt};
}

/// Whether every artinian algebra with Hilbert function H has the strong
/// Lefschetz property, equivalently the maximal rank property (the two
/// characterizations coincide): either r <= 2, or r > 2 with h_t <= 2 and
/// the weak Lefschetz condition in every degree below t.
inline ForcingVerdict forces_slp_mrp(const HilbertFunction& h) {
    detail::require_o_sequence(h);
    if (h.codimension() <= 2) return {true, Obstruction::none, std::nullopt};
    if (h[t_index(h)] > 2)
        return {false, Obstruction::socle_width, std::nullopt};
    if (auto i = detail::first_growth_failure(h))
        return {false, Obstruction::growth_condition, i};
    return {true, Obstruction::none, std::nullopt};
}

/// The Hilbert function every quotient A/F by a general degree-d form must
/// have when A has the strong Lefschetz (resp. maximal rank) property:
/// q_i = max(h_i - h_{i-d}, 0) for 0 <= i <= e. Returned untrimmed.
inline std::vector<long long> expected_quotient_hf(const HilbertFunction& h,
                                                   long long d) {
    if (d < 1) throw InvalidArgument("expected_quotient_hf requires d >= 1");
    std::vector<long long> q;
    for (long long i = 0; i <= h.socle_degree(); ++i) {
        const long long diff = h[i] - h[i - d];
        q.push_back(diff > 0 ? diff : 0);
    }
    return q;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_CLASSIFY_HPP
