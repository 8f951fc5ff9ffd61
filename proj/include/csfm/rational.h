// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSFM_RATIONAL_H_
#define CSFM_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace csfm {

// Exact rational arithmetic is used for every value that enters a guarantee
// check. GMP keeps numerators and denominators canonical.
using Rational = mpq_class;

// Parses "p/q", "p" or "-p/q". Rejects decimal points and exponents.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

// p/q in lowest terms. mpq_class(p, q) alone leaves the pair as given.
Rational Fraction(const mpz_class& p, const mpz_class& q);

// Canonical "p/q" form; integers are printed without a denominator.
std::string FormatRational(const Rational& value);

// Fixed-point decimal rendering, for human-facing output only.
std::string FormatDecimal(const Rational& value, int digits = 6);

double ToDouble(const Rational& value);

std::int64_t Floor(const Rational& value);
std::int64_t Ceil(const Rational& value);

// Smallest integer k with e^k >= x, for x > 0. The comparison uses rational
// bounds on e chosen so that the result may only err upwards.
std::int64_t CeilNaturalLog(const Rational& x);

// Smallest integer k with 2^k >= x, for x > 0. Exact.
std::int64_t CeilLog2(const Rational& x);

}  // namespace csfm

#endif  // CSFM_RATIONAL_H_
