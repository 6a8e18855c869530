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

#ifndef LEFSCHETZ_ERRORS_HPP
#define LEFSCHETZ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lefschetz {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad degree, bad range, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Classification was requested for a sequence that is not an O-sequence.
struct NotAnOSequence : Error {
    using Error::Error;
};

/// The quotient did not become zero within the supplied degree cap.
struct NotArtinianByCap : Error {
    explicit NotArtinianByCap(long long cap_)
        : Error("quotient is nonzero through degree " + std::to_string(cap_) +
                "; raise the degree cap or check that the ideal is artinian"),
          cap(cap_) {}
    long long cap;
};

/// A monomial-ideal operation was invoked on a non-monomial ideal.
struct NotMonomialIdeal : Error {
    using Error::Error;
};

/// The supplied form reduces to zero modulo the ideal.
struct FormInIdeal : Error {
    using Error::Error;
};

/// Matrix shapes are incompatible.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Polynomial text violated the grammar; `position` is a 0-based byte offset.
struct SyntaxError : Error {
    SyntaxError(const std::string& what_, std::size_t position_)
        : Error(what_ + " (at position " + std::to_string(position_) + ")"),
          position(position_) {}
    std::size_t position;
};

/// Terms of unequal degree in a polynomial literal.
struct NotHomogeneous : Error {
    using Error::Error;
};

/// A variable index outside 1..r.
struct UnknownVariable : Error {
    using Error::Error;
};

/// All terms of a polynomial literal vanished (e.g. after reduction mod p).
struct ZeroPolynomial : Error {
    using Error::Error;
};

/// An exhaustive form enumeration would exceed its configured budget.
struct ExhaustiveTooLarge : Error {
    using Error::Error;
};

/// A sweep or scan exceeded its configured budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// The strategy cannot be used in this context (e.g. exhaustive over Q).
struct InvalidStrategy : Error {
    using Error::Error;
};

}  // namespace lefschetz

#endif  // LEFSCHETZ_ERRORS_HPP
