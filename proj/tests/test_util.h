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

#ifndef SFM_TESTS_TEST_UTIL_H_
#define SFM_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "sfm/families.h"
#include "sfm/oracle.h"
#include "sfm/rational.h"
#include "sfm/subset.h"

namespace sfm::testing {

inline Rational Q(const std::string& text) { return ParseRational(text); }

inline std::vector<Rational> Qs(std::initializer_list<int64_t> values) {
  std::vector<Rational> out;
  for (int64_t v : values) out.emplace_back(static_cast<long>(v));
  return out;
}

inline SetFunctionOracle TableOracle(std::vector<std::string> labels,
                                     std::initializer_list<int64_t> values,
                                     OracleOptions options = {}) {
  return MakeOracle({GroundSet(std::move(labels)), ExplicitTable{Qs(values)}},
                    options);
}

// The two-element table used throughout: f({}) = 0, f({a}) = -1,
// f({b}) = 2, f({a,b}) = 1.
inline SetFunctionOracle AbTable(OracleOptions options = {}) {
  return TableOracle({"a", "b"}, {0, -1, 2, 1}, options);
}

inline SetFunctionOracle SingleEdgeCut() {
  CutFunctionSpec spec;
  spec.n = 2;
  spec.edges.push_back({0, 1, Rational(1)});
  return MakeOracle({GroundSet({"a", "b"}), spec});
}

inline SetFunctionOracle ModularOracle(std::vector<Rational> weights) {
  const int n = static_cast<int>(weights.size());
  return SetFunctionOracle(GroundSet::Indexed(n),
                           MakeModularFunction(std::move(weights)));
}

inline Subset Mask(int n, uint64_t mask) { return Subset::FromMask(n, mask); }

}  // namespace sfm::testing

#endif  // SFM_TESTS_TEST_UTIL_H_
