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

#ifndef LEFSCHETZ_STRATEGY_HPP
#define LEFSCHETZ_STRATEGY_HPP

#include <cstdint>
#include <string>
#include <variant>

namespace lefschetz {

/// Random forms with integer coefficients in [-coeff_bound, coeff_bound]
/// (uniform residues over a prime field). Verdicts are probabilistic-grade:
/// maximal rank is an open condition, so a random sample realizes the
/// generic rank off a measure-zero set.
struct RandomIntStrategy {
    long long coeff_bound = 1000;
    int trials = 3;
    std::uint64_t seed = 0;
    bool operator==(const RandomIntStrategy&) const = default;
};

/// The fixed linear form x_1 + ... + x_r (and its powers). Cheap and
/// deterministic to evaluate, but verdicts stay probabilistic-grade: no
/// generality guarantee is assumed for it.
struct AllOnesLinearStrategy {
    bool operator==(const AllOnesLinearStrategy&) const = default;
};

/// F = x_r^d. A general form of degree d with respect to stable ideals, so
/// verdicts on verified-stable monomial ideals are deterministic.
struct LastVariablePowerStrategy {
    bool operator==(const LastVariablePowerStrategy&) const = default;
};

/// Enumerates every form of the needed degree over F_p up to scalar,
/// up to `budget` forms per degree. Only valid over a prime field.
struct ExhaustiveFiniteFieldStrategy {
    long long budget = 20000;
    bool operator==(const ExhaustiveFiniteFieldStrategy&) const = default;
};

using FormStrategy = std::variant<RandomIntStrategy, AllOnesLinearStrategy,
                                  LastVariablePowerStrategy,
                                  ExhaustiveFiniteFieldStrategy>;

inline std::string strategy_name(const FormStrategy& s) {
    switch (s.index()) {
        case 0: return "random";
        case 1: return "allones";
        case 2: return "lastvar";
        default: return "exhaustive";
    }
}

/// Seed recorded in reports: the sampling seed for the random strategy,
/// 0 for the deterministic ones.
inline std::uint64_t strategy_seed(const FormStrategy& s) {
    if (const auto* r = std::get_if<RandomIntStrategy>(&s)) return r->seed;
    return 0;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_STRATEGY_HPP
