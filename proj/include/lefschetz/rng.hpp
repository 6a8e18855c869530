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

#ifndef LEFSCHETZ_RNG_HPP
#define LEFSCHETZ_RNG_HPP

#include <cstdint>

namespace lefschetz {

/// splitmix64: a small, fully specified generator. All randomized machinery
/// derives per-cell streams from (seed, labels...), so results are
/// reproducible and independent of evaluation order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [lo, hi] (inclusive), by rejection.
    long long uniform(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t draw;
        do {
            draw = next();
        } while (draw >= limit);
        return lo + static_cast<long long>(draw % span);
    }

private:
    std::uint64_t state_;
};

/// Derives a child seed from a parent seed and stream labels.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::uint64_t label_a,
                                 std::uint64_t label_b = 0) {
    Rng mixer(seed ^ (label_a * 0xd1342543de82ef95ULL) ^
              (label_b * 0xaf251af3b0f025b5ULL));
    return mixer.next();
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_RNG_HPP
