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

#ifndef LEFSCHETZ_FIELDS_HPP
#define LEFSCHETZ_FIELDS_HPP

#include <cstdint>
#include <string>

#include "lefschetz/errors.hpp"
#include "lefschetz/integers.hpp"

namespace lefschetz {

/// The field of rational numbers with exact arithmetic.
class RationalField {
public:
    using Element = Rational;

    long long characteristic() const { return 0; }

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element from_integer(const Int& n) const { return Rational(n); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const {
        if (a == 0) throw InvalidArgument("division by zero");
        return 1 / a;
    }
    bool is_zero(const Element& a) const { return a == 0; }

    std::string to_string(const Element& a) const { return a.str(); }

    bool operator==(const RationalField&) const = default;
};

/// The prime field Z/p with residues stored in [0, p). The modulus is kept
/// below 2^31 so products fit in 64-bit arithmetic.
class PrimeField {
public:
    using Element = long long;

    explicit PrimeField(long long p) : p_(p) {
        if (p < 2 || p >= (1LL << 31))
            throw InvalidArgument("prime field modulus out of range");
        for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0)
                throw InvalidArgument(std::to_string(p) + " is not prime");
    }

    long long characteristic() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1 % p_; }
    Element from_integer(const Int& n) const {
        Int r = n % p_;
        if (r < 0) r += p_;
        return r.convert_to<long long>();
    }

    Element add(Element a, Element b) const { return (a + b) % p_; }
    Element sub(Element a, Element b) const { return ((a - b) % p_ + p_) % p_; }
    Element mul(Element a, Element b) const { return (a * b) % p_; }
    Element neg(Element a) const { return (p_ - a) % p_; }
    Element inv(Element a) const {
        if (a == 0) throw InvalidArgument("division by zero");
        // extended Euclid
        long long t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            const long long q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        return ((t % p_) + p_) % p_;
    }
    bool is_zero(Element a) const { return a == 0; }

    std::string to_string(Element a) const { return std::to_string(a); }

    bool operator==(const PrimeField&) const = default;

private:
    long long p_;
};

/// Runtime field tag used at I/O boundaries: characteristic 0 means the
/// rationals, a prime p means Z/p.
struct FieldSpec {
    long long characteristic = 0;
    bool operator==(const FieldSpec&) const = default;
};

inline FieldSpec spec_of(const RationalField&) { return {0}; }
inline FieldSpec spec_of(const PrimeField& f) { return {f.characteristic()}; }

}  // namespace lefschetz

#endif  // LEFSCHETZ_FIELDS_HPP
