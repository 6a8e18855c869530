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

#ifndef LEFSCHETZ_SWEEP_HPP
#define LEFSCHETZ_SWEEP_HPP

#include <utility>
#include <vector>

#include "lefschetz/classify.hpp"
#include "lefschetz/tester.hpp"

namespace lefschetz {

/// All artinian O-sequences 1, h_1, ..., h_e with h_1 <= max_r, e <= max_e
/// and every value <= max_value, each trimmed (h_e >= 1) and emitted once,
/// in lexicographic order. Includes the degenerate sequence [1].
inline std::vector<HilbertFunction> enumerate_artinian_o_sequences(
    long long max_r, long long max_e, long long max_value) {
    if (max_r < 0 || max_e < 0 || max_value < 1)
        throw InvalidArgument("enumeration bounds out of range");
    std::vector<HilbertFunction> out;
    std::vector<long long> current{1};
    auto extend = [&](auto&& self) -> void {
        out.push_back(HilbertFunction(current));
        const long long e = static_cast<long long>(current.size()) - 1;
        if (e >= max_e) return;
        const long long bound =
            e == 0 ? std::min(max_r, max_value)
                   : std::min(Int(max_value),
                              macaulay_next_max(Int(current.back()), e))
                         .convert_to<long long>();
        for (long long v = 1; v <= bound; ++v) {
            current.push_back(v);
            self(self);
            current.pop_back();
        }
    };
    extend(extend);
    return out;
}

/// One sweep row: the classification verdict for H against the behavior of
/// the lex-segment algebra under x_r-powers. The degenerate sequence [1]
/// has no variables and is counted without an ideal-level check.
struct SweepRow {
    HilbertFunction h;
    bool forces = false;
    bool slp_holds = false;
    bool mrp_holds = false;
    bool checked = false;   // false only for the no-variable sequence [1]
    bool mismatch = false;  // classification and ideal behavior disagree

    SweepRow() : h(std::vector<long long>{1}) {}
};

struct SweepResult {
    std::vector<SweepRow> rows;
    long long sequences = 0;
    long long forcing = 0;
    long long mismatches = 0;
};

/// Cross-checks the forcing classification against exact rank testing of
/// the lex-segment algebra, over every enumerated O-sequence. Throws
/// BudgetExceeded when the enumeration yields more than max_sequences.
inline SweepResult run_sweep(long long max_r, long long max_e,
                             long long max_value, long long max_sequences,
                             long long degree_cap = 50) {
    const auto sequences =
        enumerate_artinian_o_sequences(max_r, max_e, max_value);
    if (static_cast<long long>(sequences.size()) > max_sequences)
        throw BudgetExceeded("sweep would visit " +
                             std::to_string(sequences.size()) +
                             " sequences, over the budget of " +
                             std::to_string(max_sequences));
    SweepResult result;
    const RationalField field;
    for (const HilbertFunction& h : sequences) {
        SweepRow row;
        row.h = h;
        row.forces = forces_slp_mrp(h).forces;
        if (h.codimension() >= 1) {
            const auto ideal = lex_segment_ideal(h, field);
            row.slp_holds =
                test_slp(ideal, LastVariablePowerStrategy{}, degree_cap).holds();
            row.mrp_holds =
                test_mrp(ideal, LastVariablePowerStrategy{}, degree_cap).holds();
            row.checked = true;
            row.mismatch =
                row.slp_holds != row.forces || row.mrp_holds != row.forces;
        }
        result.sequences += 1;
        result.forcing += row.forces ? 1 : 0;
        result.mismatches += row.mismatch ? 1 : 0;
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_SWEEP_HPP
