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

#ifndef LEFSCHETZ_MONOMIAL_HPP
#define LEFSCHETZ_MONOMIAL_HPP

#include <numeric>
#include <string>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/integers.hpp"
#include "lefschetz/macaulay.hpp"

namespace lefschetz {

/// A monomial in r variables x_1, ..., x_r, stored as its exponent vector.
/// The fixed monomial order throughout the library is descending
/// lexicographic with x_1 > x_2 > ... > x_r.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents)
        : exps_(std::move(exponents)) {
        for (int e : exps_)
            if (e < 0) throw InvalidArgument("negative exponent in monomial");
    }

    static Monomial one(int r) { return Monomial(std::vector<int>(r, 0)); }

    /// x_k (1-based) raised to the e-th power.
    static Monomial variable_power(int r, int k, int e) {
        if (k < 1 || k > r) throw InvalidArgument("variable index out of range");
        std::vector<int> exps(r, 0);
        exps[static_cast<std::size_t>(k - 1)] = e;
        return Monomial(std::move(exps));
    }

    int var_count() const { return static_cast<int>(exps_.size()); }

    long long degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), 0LL);
    }

    /// Exponent of x_k, 1-based.
    int exponent(int k) const { return exps_[static_cast<std::size_t>(k - 1)]; }

    /// Largest 1-based variable index with positive exponent; 0 for the
    /// constant monomial.
    int max_var() const {
        for (int k = var_count(); k >= 1; --k)
            if (exponent(k) > 0) return k;
        return 0;
    }

    Monomial times(const Monomial& other) const {
        std::vector<int> exps(exps_);
        for (std::size_t k = 0; k < exps.size(); ++k) exps[k] += other.exps_[k];
        return Monomial(std::move(exps));
    }

    bool divides(const Monomial& other) const {
        for (std::size_t k = 0; k < exps_.size(); ++k)
            if (exps_[k] > other.exps_[k]) return false;
        return true;
    }

    /// this / divisor; the divisor must divide this.
    Monomial divided_by(const Monomial& divisor) const {
        std::vector<int> exps(exps_);
        for (std::size_t k = 0; k < exps.size(); ++k) {
            exps[k] -= divisor.exps_[k];
            if (exps[k] < 0) throw InvalidArgument("monomial division underflow");
        }
        return Monomial(std::move(exps));
    }

    /// m * x_to / x_from (1-based indices); x_from must divide m.
    Monomial exchange(int from_var, int to_var) const {
        std::vector<int> exps(exps_);
        if (exps[static_cast<std::size_t>(from_var - 1)] == 0)
            throw InvalidArgument("exchange variable does not divide monomial");
        --exps[static_cast<std::size_t>(from_var - 1)];
        ++exps[static_cast<std::size_t>(to_var - 1)];
        return Monomial(std::move(exps));
    }

    const std::vector<int>& exponents() const { return exps_; }

    bool operator==(const Monomial&) const = default;

    /// Grammar-compatible rendering, e.g. "x1^2*x3" ("1" for the constant).
    std::string to_string() const {
        std::string out;
        for (int k = 1; k <= var_count(); ++k) {
            const int e = exponent(k);
            if (e == 0) continue;
            if (!out.empty()) out += '*';
            out += 'x' + std::to_string(k);
            if (e > 1) out += '^' + std::to_string(e);
        }
        return out.empty() ? "1" : out;
    }

private:
    std::vector<int> exps_;
};

/// Strict "greater in descending lex" comparison (x_1 weighs most).
inline bool lex_greater(const Monomial& a, const Monomial& b) {
    return a.exponents() > b.exponents();
}

/// Comparator making ordered containers iterate in descending lex order.
struct DescendingLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return lex_greater(a, b);
    }
};

/// Number of monomials of degree d in r variables, C(r+d-1, d).
inline long long monomial_count(int r, long long d) {
    const Int count = binom_ext(Int(r) + d - 1, Int(d));
    if (count > 4000000000000000LL)
        throw InvalidArgument("degree slice is too large to enumerate");
    return count.convert_to<long long>();
}

namespace detail {

inline void generate_monomials(int r, int pos, long long remaining,
                               std::vector<int>& current,
                               std::vector<Monomial>& out) {
    if (pos == r - 1) {
        current[static_cast<std::size_t>(pos)] = static_cast<int>(remaining);
        out.push_back(Monomial(current));
        return;
    }
    for (long long e = remaining; e >= 0; --e) {
        current[static_cast<std::size_t>(pos)] = static_cast<int>(e);
        generate_monomials(r, pos + 1, remaining - e, current, out);
    }
}

}  // namespace detail

/// All monomials of degree d in r variables, in descending lex order.
inline std::vector<Monomial> monomials_of_degree(int r, long long d) {
    if (r < 1) throw InvalidArgument("monomials_of_degree requires r >= 1");
    if (d < 0) throw InvalidArgument("monomials_of_degree requires d >= 0");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(monomial_count(r, d)));
    std::vector<int> current(static_cast<std::size_t>(r), 0);
    detail::generate_monomials(r, 0, d, current, out);
    return out;
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_MONOMIAL_HPP
