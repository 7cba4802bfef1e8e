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

#include "sfm/families.h"

#include <algorithm>
#include <string>

#include "sfm/errors.h"

namespace sfm {
namespace {

bool AllIntegers(const std::vector<Rational>& values) {
  return std::all_of(values.begin(), values.end(),
                     [](const Rational& v) { return IsInteger(v); });
}

Rational ModularValue(const std::vector<Rational>& modular, const Subset& x) {
  Rational sum = 0;
  if (modular.empty()) return sum;
  for (int i : x.Indices()) sum += modular[i];
  return sum;
}

void CheckModular(const std::vector<Rational>& modular, int n,
                  const char* family) {
  if (!modular.empty() && static_cast<int>(modular.size()) != n) {
    throw InvalidArgumentError(std::string(family) +
                               ": modular term needs one value per element");
  }
}

class TableFunction : public SetFunction {
 public:
  explicit TableFunction(std::vector<Rational> values)
      : values_(std::move(values)) {
    const std::size_t count = values_.size();
    if (count == 0 || (count & (count - 1)) != 0) {
      throw InvalidArgumentError(
          "table: number of values must be a power of two");
    }
    n_ = 0;
    while ((std::size_t{1} << n_) < count) ++n_;
    integral_ = AllIntegers(values_);
  }

  int size() const override { return n_; }
  Rational Evaluate(const Subset& x) const override {
    return values_[x.Mask()];
  }
  bool IntegerValued() const override { return integral_; }

 private:
  std::vector<Rational> values_;
  int n_ = 0;
  bool integral_ = false;
};

class CutFunction : public SetFunction {
 public:
  explicit CutFunction(CutFunctionSpec spec) : spec_(std::move(spec)) {
    if (spec_.n < 0) throw InvalidArgumentError("cut: negative vertex count");
    for (const Edge& e : spec_.edges) {
      if (e.from < 0 || e.from >= spec_.n || e.to < 0 || e.to >= spec_.n) {
        throw InvalidArgumentError("cut: edge endpoint out of range");
      }
      if (sgn(e.capacity) < 0) {
        throw InvalidArgumentError("cut: negative edge capacity");
      }
    }
    CheckModular(spec_.modular, spec_.n, "cut");
    integral_ = AllIntegers(spec_.modular) &&
                std::all_of(spec_.edges.begin(), spec_.edges.end(),
                            [](const Edge& e) { return IsInteger(e.capacity); });
  }

  int size() const override { return spec_.n; }
  Rational Evaluate(const Subset& x) const override {
    Rational total = ModularValue(spec_.modular, x);
    for (const Edge& e : spec_.edges) {
      const bool in_from = x.Contains(e.from);
      const bool in_to = x.Contains(e.to);
      if (spec_.directed ? (in_from && !in_to) : (in_from != in_to)) {
        total += e.capacity;
      }
    }
    return total;
  }
  bool IntegerValued() const override { return integral_; }

 private:
  CutFunctionSpec spec_;
  bool integral_ = false;
};

class CoverageFunction : public SetFunction {
 public:
  explicit CoverageFunction(CoverageSpec spec) : spec_(std::move(spec)) {
    const int items = static_cast<int>(spec_.item_weights.size());
    for (const Rational& w : spec_.item_weights) {
      if (sgn(w) < 0) {
        throw InvalidArgumentError("coverage: negative item weight");
      }
    }
    if (spec_.covers.size() != spec_.costs.size()) {
      throw InvalidArgumentError(
          "coverage: covers and costs must have one entry per element");
    }
    for (const auto& c : spec_.covers) {
      for (int item : c) {
        if (item < 0 || item >= items) {
          throw InvalidArgumentError("coverage: item index out of range");
        }
      }
    }
    integral_ = AllIntegers(spec_.item_weights) && AllIntegers(spec_.costs);
  }

  int size() const override { return static_cast<int>(spec_.costs.size()); }
  Rational Evaluate(const Subset& x) const override {
    std::vector<bool> covered(spec_.item_weights.size(), false);
    Rational total = 0;
    for (int v : x.Indices()) {
      total -= spec_.costs[v];
      for (int item : spec_.covers[v]) {
        if (!covered[item]) {
          covered[item] = true;
          total += spec_.item_weights[item];
        }
      }
    }
    return total;
  }
  bool IntegerValued() const override { return integral_; }

 private:
  CoverageSpec spec_;
  bool integral_ = false;
};

class PartitionMatroidRank : public SetFunction {
 public:
  explicit PartitionMatroidRank(PartitionMatroidSpec spec)
      : spec_(std::move(spec)) {
    if (spec_.blocks.size() != spec_.caps.size()) {
      throw InvalidArgumentError("matroid: one cap per block required");
    }
    block_of_.assign(spec_.n, -1);
    for (int b = 0; b < static_cast<int>(spec_.blocks.size()); ++b) {
      if (spec_.caps[b] < 0) {
        throw InvalidArgumentError("matroid: negative block cap");
      }
      for (int v : spec_.blocks[b]) {
        if (v < 0 || v >= spec_.n || block_of_[v] != -1) {
          throw InvalidArgumentError(
              "matroid: blocks must partition the ground set");
        }
        block_of_[v] = b;
      }
    }
    if (std::count(block_of_.begin(), block_of_.end(), -1) != 0) {
      throw InvalidArgumentError("matroid: blocks must partition the ground set");
    }
    CheckModular(spec_.modular, spec_.n, "matroid");
    integral_ = AllIntegers(spec_.modular);
  }

  int size() const override { return spec_.n; }
  Rational Evaluate(const Subset& x) const override {
    std::vector<int> used(spec_.blocks.size(), 0);
    for (int v : x.Indices()) ++used[block_of_[v]];
    long rank = 0;
    for (std::size_t b = 0; b < used.size(); ++b) {
      rank += std::min(used[b], spec_.caps[b]);
    }
    return Rational(rank) + ModularValue(spec_.modular, x);
  }
  bool IntegerValued() const override { return integral_; }

 private:
  PartitionMatroidSpec spec_;
  std::vector<int> block_of_;
  bool integral_ = false;
};

class ConcaveCardinality : public SetFunction {
 public:
  explicit ConcaveCardinality(ConcaveCardinalitySpec spec)
      : spec_(std::move(spec)) {
    if (spec_.g.empty() || sgn(spec_.g[0]) != 0) {
      throw InvalidArgumentError("concave: g must start with g(0) = 0");
    }
    for (std::size_t k = 2; k < spec_.g.size(); ++k) {
      if (spec_.g[k] - spec_.g[k - 1] > spec_.g[k - 1] - spec_.g[k - 2]) {
        throw InvalidArgumentError("concave: g is not concave at " +
                                   std::to_string(k - 1));
      }
    }
    CheckModular(spec_.modular, size(), "concave");
    integral_ = AllIntegers(spec_.g) && AllIntegers(spec_.modular);
  }

  int size() const override { return static_cast<int>(spec_.g.size()) - 1; }
  Rational Evaluate(const Subset& x) const override {
    return spec_.g[x.Count()] + ModularValue(spec_.modular, x);
  }
  bool IntegerValued() const override { return integral_; }

 private:
  ConcaveCardinalitySpec spec_;
  bool integral_ = false;
};

class ModularFunction : public SetFunction {
 public:
  explicit ModularFunction(std::vector<Rational> w) : w_(std::move(w)) {}
  int size() const override { return static_cast<int>(w_.size()); }
  Rational Evaluate(const Subset& x) const override {
    return ModularValue(w_, x);
  }
  bool IntegerValued() const override { return AllIntegers(w_); }

 private:
  std::vector<Rational> w_;
};

struct SizeVisitor {
  int operator()(const ExplicitTable& t) const {
    int n = 0;
    while ((std::size_t{1} << n) < t.values.size()) ++n;
    return n;
  }
  int operator()(const CutFunctionSpec& c) const { return c.n; }
  int operator()(const CoverageSpec& c) const {
    return static_cast<int>(c.costs.size());
  }
  int operator()(const PartitionMatroidSpec& m) const { return m.n; }
  int operator()(const ConcaveCardinalitySpec& c) const {
    return static_cast<int>(c.g.size()) - 1;
  }
};

struct MakeVisitor {
  std::shared_ptr<const SetFunction> operator()(const ExplicitTable& t) const {
    auto fn = std::make_shared<TableFunction>(t.values);
    if (fn->size() <= 16) {
      if (auto bad = FindSubmodularityViolation(*fn)) {
        throw InvalidArgumentError("submodularity violated at (" +
                                   bad->first.ToString() + "," +
                                   bad->second.ToString() + ")");
      }
    }
    return fn;
  }
  std::shared_ptr<const SetFunction> operator()(
      const CutFunctionSpec& c) const {
    return std::make_shared<CutFunction>(c);
  }
  std::shared_ptr<const SetFunction> operator()(const CoverageSpec& c) const {
    return std::make_shared<CoverageFunction>(c);
  }
  std::shared_ptr<const SetFunction> operator()(
      const PartitionMatroidSpec& m) const {
    return std::make_shared<PartitionMatroidRank>(m);
  }
  std::shared_ptr<const SetFunction> operator()(
      const ConcaveCardinalitySpec& c) const {
    return std::make_shared<ConcaveCardinality>(c);
  }
};

}  // namespace

int FamilySize(const FunctionFamily& family) {
  return std::visit(SizeVisitor{}, family);
}

std::shared_ptr<const SetFunction> MakeSetFunction(
    const FunctionFamily& family) {
  return std::visit(MakeVisitor{}, family);
}

SetFunctionOracle MakeOracle(const Instance& instance, OracleOptions options) {
  return SetFunctionOracle(instance.ground, MakeSetFunction(instance.family),
                           options);
}

std::shared_ptr<const SetFunction> MakeModularFunction(
    std::vector<Rational> weights) {
  return std::make_shared<ModularFunction>(std::move(weights));
}

}  // namespace sfm
