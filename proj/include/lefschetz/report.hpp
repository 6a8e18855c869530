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

#ifndef LEFSCHETZ_REPORT_HPP
#define LEFSCHETZ_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/fields.hpp"
#include "lefschetz/strategy.hpp"

namespace lefschetz {

enum class LefschetzProperty { wlp, slp, mrp };

enum class Verdict {
    holds_deterministic,
    holds_probabilistic,
    fails_observed,
    inconclusive,
};

/// One tested multiplication map: x F : A_i -> A_{i+d} with F of degree d.
struct RankEntry {
    long long form_degree = 0;   // d
    long long start_degree = 0;  // i
    long long max_possible = 0;  // min(h_i, h_{i+d})
    long long best_rank = 0;     // best rank observed across all trials
    long long trials_used = 0;
    bool operator==(const RankEntry&) const = default;
};

/// Outcome of a WLP/SLP/MRP test run. Entries are sorted by (d, i); the
/// verdict is Holds* exactly when every entry reached its maximum.
struct PropertyReport {
    LefschetzProperty property = LefschetzProperty::wlp;
    Verdict verdict = Verdict::inconclusive;
    std::vector<RankEntry> entries;
    FormStrategy strategy = RandomIntStrategy{};
    std::uint64_t seed = 0;
    FieldSpec field;
    std::string note;  // empty when there is nothing to flag

    bool holds() const {
        return verdict == Verdict::holds_deterministic ||
               verdict == Verdict::holds_probabilistic;
    }
    bool operator==(const PropertyReport&) const = default;
};

inline std::string to_string(LefschetzProperty p) {
    switch (p) {
        case LefschetzProperty::wlp: return "wlp";
        case LefschetzProperty::slp: return "slp";
        case LefschetzProperty::mrp: return "mrp";
    }
    return "wlp";
}

inline LefschetzProperty property_from_string(const std::string& s) {
    if (s == "wlp") return LefschetzProperty::wlp;
    if (s == "slp") return LefschetzProperty::slp;
    if (s == "mrp") return LefschetzProperty::mrp;
    throw InvalidArgument("unknown property \"" + s + "\"");
}

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds_deterministic: return "holds-deterministic";
        case Verdict::holds_probabilistic: return "holds-probabilistic";
        case Verdict::fails_observed: return "fails-observed";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "holds-deterministic") return Verdict::holds_deterministic;
    if (s == "holds-probabilistic") return Verdict::holds_probabilistic;
    if (s == "fails-observed") return Verdict::fails_observed;
    if (s == "inconclusive") return Verdict::inconclusive;
    throw InvalidArgument("unknown verdict \"" + s + "\"");
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_REPORT_HPP
