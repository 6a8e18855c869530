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

#ifndef LEFSCHETZ_LEFSCHETZ_HPP
#define LEFSCHETZ_LEFSCHETZ_HPP

// Umbrella header: exact Macaulay binomial calculus, Hilbert-function
// classification for the Lefschetz and maximal rank properties, and rank
// testing of multiplication maps on explicit artinian quotients.

#include "lefschetz/classify.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/fields.hpp"
#include "lefschetz/forms.hpp"
#include "lefschetz/hilbert.hpp"
#include "lefschetz/hp_bounds.hpp"
#include "lefschetz/ideal.hpp"
#include "lefschetz/integers.hpp"
#include "lefschetz/json_io.hpp"
#include "lefschetz/lex_segment.hpp"
#include "lefschetz/macaulay.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/parse.hpp"
#include "lefschetz/polynomial.hpp"
#include "lefschetz/report.hpp"
#include "lefschetz/rng.hpp"
#include "lefschetz/strategy.hpp"
#include "lefschetz/sweep.hpp"
#include "lefschetz/tester.hpp"

#endif  // LEFSCHETZ_LEFSCHETZ_HPP
