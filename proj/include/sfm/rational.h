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

#ifndef SFM_RATIONAL_H_
#define SFM_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sfm {

// Exact rational. GMP keeps every result in lowest terms with a positive
// denominator.
using Rational = mpq_class;

// Parses "p", "-p", "p/q". Throws InputError on anything else, including a
// zero denominator.
Rational ParseRational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string FormatRational(const Rational& value);

inline bool IsInteger(const Rational& value) {
  return value.get_den() == 1;
}

inline Rational NegativePart(const Rational& value) {
  return sgn(value) < 0 ? value : Rational(0);
}

// Smallest k >= 0 with 2^k >= value, for value > 0.
int CeilLog2(const Rational& value);

}  // namespace sfm

#endif  // SFM_RATIONAL_H_
