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

#ifndef LEFSCHETZ_HP_BOUNDS_HPP
#define LEFSCHETZ_HP_BOUNDS_HPP

#include <optional>
#include <vector>

#include "lefschetz/hilbert.hpp"
#include "lefschetz/macaulay.hpp"
#include "lefschetz/tester.hpp"

namespace lefschetz {

/// Herzog-Popescu upper bound for the Hilbert function of A/F in degree p,
/// where F is a general form of degree d and A has Hilbert function H:
///
///   H(A/F, p) <= sum_{c=0}^{d-1} H(A,p)_((p,c)),
///
/// with the convention that the sum is 0 when H(p) = 0. Requires p >= d.
inline Int hp_upper_bound(const HilbertFunction& h, long long p, long long d) {
    if (d < 1) throw InvalidArgument("hp_upper_bound requires d >= 1");
    if (p < d) throw InvalidArgument("hp_upper_bound requires p >= d");
    const long long n = h[p];
    if (n == 0) return 0;
    Int sum = 0;
    for (long long c = 0; c < d; ++c) sum += double_bracket(Int(n), p, c);
    return sum;
}

/// One evaluation of the vanishing sum sum_{c<d} n_((p,c)).
struct IdentityScanEntry {
    long long n = 0;
    long long p = 0;
    long long d = 0;
    Int value = 0;
    bool operator==(const IdentityScanEntry&) const = default;
};

/// Result of scanning the vanishing identity sum_{c<d} n_((p,c)) = 0 over
/// n <= n_max and 1 <= d < p <= p_max, plus a nonzero witness search at n = 3
/// (the identity is specific to n <= 2 and genuinely fails at 3).
struct IdentityScanResult {
    std::vector<IdentityScanEntry> counterexamples;
    std::optional<IdentityScanEntry> nonzero_witness;
};

inline IdentityScanResult verify_key_identity(long long n_max, long long p_max) {
    IdentityScanResult result;
    for (long long n = 1; n <= n_max; ++n)
        for (long long p = 2; p <= p_max; ++p)
            for (long long d = 1; d < p; ++d) {
                Int sum = 0;
                for (long long c = 0; c < d; ++c)
                    sum += double_bracket(Int(n), p, c);
                if (sum != 0)
                    result.counterexamples.push_back({n, p, d, sum});
            }
    for (long long p = 2; p <= p_max && !result.nonzero_witness; ++p)
        for (long long d = 1; d < p; ++d) {
            Int sum = 0;
            for (long long c = 0; c < d; ++c)
                sum += double_bracket(Int(3), p, c);
            if (sum != 0) {
                result.nonzero_witness = IdentityScanEntry{3, p, d, sum};
                break;
            }
        }
    return result;
}

/// End-to-end check of the Herzog-Popescu bound on an actual quotient: for
/// every strategy-produced form F of degree d and every p with d <= p <= e,
/// H(R/(I,F), p) must not exceed hp_upper_bound(H(R/I), p, d). Characteristic
/// zero only; forms reducing to zero modulo I are skipped (the bound speaks
/// about general forms).
template <class F>
bool verify_hp_theorem(const GradedIdeal<F>& ideal, long long d,
                       const FormStrategy& strategy, long long degree_cap = 50) {
    if (ideal.field().characteristic() != 0)
        throw InvalidArgument("verify_hp_theorem requires characteristic zero");
    if (d < 1) throw InvalidArgument("verify_hp_theorem requires d >= 1");
    const HilbertFunction h = hilbert_function(ideal, degree_cap);
    const long long e = h.socle_degree();
    bool ok = true;
    detail::for_each_strategy_form<F>(
        ideal.field(), ideal.var_count(), d, strategy, detail::stream_mrp,
        [&](const Polynomial<F>& form) {
            if (!ok || in_ideal_slice(ideal, form)) return;
            const HilbertFunction h_modulo =
                hilbert_function(ideal.with_form(form), degree_cap);
            for (long long p = d; p <= e; ++p)
                if (Int(h_modulo[p]) > hp_upper_bound(h, p, d)) ok = false;
        });
    return ok;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_HP_BOUNDS_HPP
