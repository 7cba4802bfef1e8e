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

#ifndef SFM_FAMILIES_H_
#define SFM_FAMILIES_H_

#include <memory>
#include <variant>
#include <vector>

#include "sfm/oracle.h"
#include "sfm/rational.h"

namespace sfm {

// Every family below is submodular by construction, except ExplicitTable,
// which is validated when it is turned into a function. All of them accept
// an optional modular term (empty means zero) that is added to the value.

// values[m] = f(X) where bit i of m says whether element i is in X.
struct ExplicitTable {
  std::vector<Rational> values;
};

struct Edge {
  int from = 0;
  int to = 0;
  Rational capacity;
};

// f(X) = capacity of edges leaving X (with exactly one end in X when
// undirected), plus modular(X).
struct CutFunctionSpec {
  int n = 0;
  bool directed = false;
  std::vector<Edge> edges;
  std::vector<Rational> modular;
};

// f(X) = weight of items covered by X - costs(X). Item weights are
// nonnegative.
struct CoverageSpec {
  std::vector<Rational> item_weights;
  std::vector<std::vector<int>> covers;  // per element, item indices
  std::vector<Rational> costs;           // per element
};

// Partition matroid rank: sum over blocks of min(|X & block|, cap), plus
// modular(X).
struct PartitionMatroidSpec {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> caps;
  std::vector<Rational> modular;
};

// f(X) = g(|X|) + modular(X) with g concave and g(0) = 0.
struct ConcaveCardinalitySpec {
  std::vector<Rational> g;  // g[0..n]
  std::vector<Rational> modular;
};

using FunctionFamily =
    std::variant<ExplicitTable, CutFunctionSpec, CoverageSpec,
                 PartitionMatroidSpec, ConcaveCardinalitySpec>;

// Number of ground set elements the family is defined over.
int FamilySize(const FunctionFamily& family);

// Validates the family's parameters and returns its evaluation hook. Throws
// InvalidArgumentError on malformed parameters. An ExplicitTable with
// n <= 16 is checked exhaustively; a violation is reported as
// "submodularity violated at (X,Y)".
std::shared_ptr<const SetFunction> MakeSetFunction(const FunctionFamily& family);

struct Instance {
  GroundSet ground;
  FunctionFamily family;
};

SetFunctionOracle MakeOracle(const Instance& instance,
                             OracleOptions options = {});

// Modular function f(X) = sum of weights over X. Mostly for tests.
std::shared_ptr<const SetFunction> MakeModularFunction(
    std::vector<Rational> weights);

}  // namespace sfm

#endif  // SFM_FAMILIES_H_
