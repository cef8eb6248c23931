// Copyright 2026 The emocov Authors.
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

#ifndef EMOCOV_RATIONAL_H_
#define EMOCOV_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace emocov {

// Exact arbitrary-precision fraction. Coverage ratios, accuracies and
// vote scores are all carried in this type; decimals appear only at output.
using Rational = boost::multiprecision::cpp_rational;

// Parses "0.931", "1", "-0.5" or "931/1000" exactly. Throws Error(kParse).
Rational ParseRational(std::string_view text);

// Exact rational for a double, via its shortest round-trip decimal form, so
// 0.931 read from a JSON number becomes 931/1000 rather than a binary
// approximation.
Rational RationalFromDouble(double value);

// "num/den" in lowest terms; integers render as "n/1".
std::string ToFractionString(const Rational& value);

std::string NumeratorString(const Rational& value);
std::string DenominatorString(const Rational& value);

// Fixed-point rendering with `digits` fractional digits, rounded half away
// from zero.
std::string ToDecimalString(const Rational& value, int digits);

// Decimal rounded to `digits` places, converted to the nearest double.
double ToRoundedDouble(const Rational& value, int digits);

}  // namespace emocov

#endif  // EMOCOV_RATIONAL_H_
