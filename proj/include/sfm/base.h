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

#ifndef SFM_BASE_H_
#define SFM_BASE_H_

#include <vector>

#include "sfm/oracle.h"
#include "sfm/ordering.h"
#include "sfm/rational.h"

namespace sfm {

// An extreme base y of B(f) together with the ordering that generates it.
// prefix_values[k] caches f({v_0, ..., v_k}) so that tightness checks and
// adjacent exchanges need a single fresh oracle call.
struct ExtremeBase {
  std::vector<Rational> y;  // indexed by element
  LinearOrdering ordering;
  std::vector<Rational> prefix_values;
};

// Edmonds' greedy rule: y(v_k) = f({v_0..v_k}) - f({v_0..v_{k-1}}).
// Exactly n oracle calls.
ExtremeBase GreedyExtremeBase(const SetFunctionOracle& f,
                              const LinearOrdering& order);

// Exchange capacity of the adjacent pair v = ordering[k-1], u = ordering[k]:
//   beta = f(L(u) - v) - f(L(u)) + y(v),
// which equals max{a : y + a(chi_u - chi_v) in B(f)}. One oracle call.
// Requires 1 <= k <= n-1.
Rational ExchangeCapacityConsecutive(const SetFunctionOracle& f,
                                     const ExtremeBase& b, int k);

// The base generated by `b.ordering` with positions k-1 and k swapped,
// y' = y + beta(chi_u - chi_v), given beta from ExchangeCapacityConsecutive.
// No oracle calls.
ExtremeBase ApplyInterchange(ExtremeBase b, int k, const Rational& beta);

struct CombinationEntry {
  Rational lambda;
  ExtremeBase base;
};

// x = sum_i lambda_i y_i with lambda_i > 0 summing to 1.
struct ConvexCombination {
  ConvexCombination() = default;
  explicit ConvexCombination(ExtremeBase single);

  std::vector<CombinationEntry> entries;
  std::vector<Rational> x;

  int size() const { return static_cast<int>(entries.size()); }
  // x recomputed from the entries.
  std::vector<Rational> Sum() const;
  // Throws InternalInvariantError if a weight is nonpositive, the weights do
  // not sum to 1, or x is stale.
  void CheckInvariants() const;
};

// Rewrites `c` over an affinely independent subset of its extreme bases with
// the same x. Repeatedly finds mu != 0 with sum mu_i y_i = 0 and
// sum mu_i = 0 by exact Gaussian elimination, steps lambda -= theta mu with
// theta = min{lambda_i / mu_i : mu_i > 0}, and drops every zeroed entry.
ConvexCombination ReduceCombination(ConvexCombination c);

}  // namespace sfm

#endif  // SFM_BASE_H_
