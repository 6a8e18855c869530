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

#ifndef LEFSCHETZ_HILBERT_HPP
#define LEFSCHETZ_HILBERT_HPP

#include <string>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/macaulay.hpp"

namespace lefschetz {

/// A finite candidate Hilbert function h_0, h_1, ..., h_e of an artinian
/// graded quotient. Trailing zeros are trimmed on construction and every
/// value beyond the socle degree e reads as 0.
class HilbertFunction {
public:
    explicit HilbertFunction(std::vector<long long> values)
        : values_(std::move(values)) {
        if (values_.empty())
            throw InvalidArgument("a Hilbert function needs at least one value");
        for (long long v : values_)
            if (v < 0)
                throw InvalidArgument("Hilbert function values must be nonnegative");
        while (values_.size() > 1 && values_.back() == 0) values_.pop_back();
    }

    /// Value in degree d; 0 outside the stored range.
    long long operator[](long long d) const {
        if (d < 0 || d >= static_cast<long long>(values_.size())) return 0;
        return values_[static_cast<std::size_t>(d)];
    }

    const std::vector<long long>& values() const { return values_; }

    /// Last stored degree e (0 for the degenerate sequence [1]).
    long long socle_degree() const {
        return static_cast<long long>(values_.size()) - 1;
    }

    /// Codimension r = h_1.
    long long codimension() const { return (*this)[1]; }

    bool operator==(const HilbertFunction&) const = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < values_.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(values_[k]);
        }
        return out;
    }

private:
    std::vector<long long> values_;
};

/// Whether H satisfies Macaulay's growth bound in every degree (with h_0 = 1
/// required and h_1 unconstrained), i.e. whether H is the Hilbert function
/// of some standard graded algebra.
inline bool is_o_sequence(const HilbertFunction& h) {
    if (h[0] != 1) return false;
    for (long long d = 1; d < h.socle_degree(); ++d)
        if (Int(h[d + 1]) > macaulay_next_max(Int(h[d]), d)) return false;
    return true;
}

/// The smallest t >= 1 with h_t <= t (values beyond the socle degree are 0,
/// so t always exists).
inline long long t_index(const HilbertFunction& h) {
    long long t = 1;
    while (h[t] > t) ++t;
    return t;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_HILBERT_HPP
