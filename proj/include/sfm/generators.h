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

#ifndef SFM_GENERATORS_H_
#define SFM_GENERATORS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sfm/families.h"
#include "sfm/rational.h"

namespace sfm {

// "table", "cut", "coverage", "matroid", "concave".
const std::vector<std::string>& GeneratorFamilies();

// Random integer-valued submodular instance on n elements labelled
// "0".."n-1". The same (family, n, seed) always gives the same instance,
// independent of platform. Tables are weighted coverage functions minus a
// modular cost, tabulated; they are limited to n <= 20. Throws
// InvalidArgumentError for an unknown family or n < 1.
Instance GenerateInstance(std::string_view family, int n, uint64_t seed);

struct ScaledInstance {
  Instance instance;
  // Distinct values of the instance differ by at least this much.
  Rational epsilon;
};

// Like GenerateInstance, with every value multiplied by a random rational
// p/q. "matroid" has integer caps, so it is generated as a table instead.
ScaledInstance GenerateRationalInstance(std::string_view family, int n,
                                        uint64_t seed);

}  // namespace sfm

#endif  // SFM_GENERATORS_H_
