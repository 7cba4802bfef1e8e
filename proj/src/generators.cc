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

#include "sfm/generators.h"

#include <algorithm>
#include <functional>
#include <random>

#include "sfm/errors.h"

namespace sfm {
namespace {

constexpr int kMaxGeneratedTable = 20;

// Raw engine output reduced by modulo, so the stream is the same with every
// standard library.
class Random {
 public:
  explicit Random(uint64_t seed) : engine_(seed) {}

  int64_t Uniform(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(engine_() % static_cast<uint64_t>(hi - lo + 1));
  }
  bool Coin(int percent) { return Uniform(0, 99) < percent; }

 private:
  std::mt19937_64 engine_;
};

std::vector<Rational> RandomVector(Random& rng, int n, int lo, int hi) {
  std::vector<Rational> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.emplace_back(rng.Uniform(lo, hi));
  return out;
}

CoverageSpec RandomCoverage(Random& rng, int n, int items, int cost_hi) {
  CoverageSpec spec;
  spec.item_weights = RandomVector(rng, items, 1, 6);
  spec.covers.resize(n);
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < items; ++j) {
      if (rng.Coin(35)) spec.covers[v].push_back(j);
    }
  }
  spec.costs = RandomVector(rng, n, 0, cost_hi);
  return spec;
}

ExplicitTable RandomTable(Random& rng, int n) {
  if (n > kMaxGeneratedTable) {
    throw InvalidArgumentError("table generator supports n <= 20");
  }
  const CoverageSpec spec = RandomCoverage(rng, n, n + 3, 7);
  auto fn = MakeSetFunction(spec);
  ExplicitTable table;
  const uint64_t count = uint64_t{1} << n;
  table.values.reserve(count);
  for (uint64_t mask = 0; mask < count; ++mask) {
    table.values.push_back(fn->Evaluate(Subset::FromMask(n, mask)));
  }
  return table;
}

CutFunctionSpec RandomCut(Random& rng, int n) {
  CutFunctionSpec spec;
  spec.n = n;
  spec.directed = rng.Coin(50);
  for (int u = 0; u < n; ++u) {
    for (int v = spec.directed ? 0 : u + 1; v < n; ++v) {
      if (u != v && rng.Coin(40)) {
        spec.edges.push_back({u, v, Rational(rng.Uniform(1, 9))});
      }
    }
  }
  spec.modular = RandomVector(rng, n, -8, 4);
  return spec;
}

PartitionMatroidSpec RandomMatroid(Random& rng, int n) {
  PartitionMatroidSpec spec;
  spec.n = n;
  const int blocks = static_cast<int>(rng.Uniform(1, (n + 1) / 2));
  spec.blocks.resize(blocks);
  for (int v = 0; v < n; ++v) {
    spec.blocks[rng.Uniform(0, blocks - 1)].push_back(v);
  }
  std::erase_if(spec.blocks, [](const auto& b) { return b.empty(); });
  for (const auto& b : spec.blocks) {
    spec.caps.push_back(
        static_cast<int>(rng.Uniform(1, static_cast<int64_t>(b.size()))));
  }
  spec.modular = RandomVector(rng, n, -2, 1);
  return spec;
}

ConcaveCardinalitySpec RandomConcave(Random& rng, int n) {
  std::vector<int64_t> steps;
  for (int k = 0; k < n; ++k) steps.push_back(rng.Uniform(-4, 8));
  std::sort(steps.begin(), steps.end(), std::greater<>());
  ConcaveCardinalitySpec spec;
  spec.g.emplace_back(0);
  for (int64_t s : steps) spec.g.push_back(spec.g.back() + s);
  spec.modular = RandomVector(rng, n, -6, 4);
  return spec;
}

FunctionFamily RandomFamily(std::string_view family, Random& rng, int n) {
  if (family == "table") return RandomTable(rng, n);
  if (family == "cut") return RandomCut(rng, n);
  if (family == "coverage") return RandomCoverage(rng, n, n + 2, 8);
  if (family == "matroid") return RandomMatroid(rng, n);
  if (family == "concave") return RandomConcave(rng, n);
  throw InvalidArgumentError("unknown generator family '" +
                             std::string(family) + "'");
}

void ScaleAll(std::vector<Rational>& values, const Rational& s) {
  for (auto& v : values) v *= s;
}

}  // namespace

const std::vector<std::string>& GeneratorFamilies() {
  static const std::vector<std::string> kFamilies = {
      "table", "cut", "coverage", "matroid", "concave"};
  return kFamilies;
}

Instance GenerateInstance(std::string_view family, int n, uint64_t seed) {
  if (n < 1) throw InvalidArgumentError("generator needs n >= 1");
  Random rng(seed);
  return {GroundSet::Indexed(n), RandomFamily(family, rng, n)};
}

ScaledInstance GenerateRationalInstance(std::string_view family, int n,
                                        uint64_t seed) {
  if (family == "matroid") family = "table";
  Instance instance = GenerateInstance(family, n, seed);
  Random rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const int64_t numerator = rng.Uniform(1, 7);
  const int64_t denominator = rng.Uniform(2, 11);
  Rational scale(numerator, denominator);
  scale.canonicalize();
  std::visit(
      [&](auto& spec) {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ExplicitTable>) {
          ScaleAll(spec.values, scale);
        } else if constexpr (std::is_same_v<T, CutFunctionSpec>) {
          for (auto& e : spec.edges) e.capacity *= scale;
          ScaleAll(spec.modular, scale);
        } else if constexpr (std::is_same_v<T, CoverageSpec>) {
          ScaleAll(spec.item_weights, scale);
          ScaleAll(spec.costs, scale);
        } else if constexpr (std::is_same_v<T, ConcaveCardinalitySpec>) {
          ScaleAll(spec.g, scale);
          ScaleAll(spec.modular, scale);
        }
      },
      instance.family);
  return {std::move(instance), scale};
}

}  // namespace sfm
