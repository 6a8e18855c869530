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

#ifndef LEFSCHETZ_INTEGERS_HPP
#define LEFSCHETZ_INTEGERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace lefschetz {

// Unbounded exact arithmetic throughout: binomial tops and slice-matrix
// minors overflow fixed-width types already at modest sizes.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace lefschetz

#endif  // LEFSCHETZ_INTEGERS_HPP
