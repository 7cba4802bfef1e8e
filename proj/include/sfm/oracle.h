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

#ifndef SFM_ORACLE_H_
#define SFM_ORACLE_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sfm/ordering.h"
#include "sfm/rational.h"
#include "sfm/subset.h"

namespace sfm {

// Labelled ground set V. Labels are unique; elements are addressed by index.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  // Labels "0", "1", ..., "n-1".
  static GroundSet Indexed(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> IndexOf(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
};

// Raw evaluation hook of a set function. Implementations need not satisfy
// f(empty) = 0; SetFunctionOracle normalizes.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual int size() const = 0;
  virtual Rational Evaluate(const Subset& x) const = 0;
  // True when every value is known to be an integer.
  virtual bool IntegerValued() const { return false; }
};

struct OracleOptions {
  bool cache = true;
  std::size_t cache_capacity = std::size_t{1} << 16;
};

// Evaluation oracle for a submodular function with f(empty) = 0.
//
// Copies share the call counter and the cache. Oracles derived from another
// oracle (restrictions, clamps, scalings, group views) forward every
// evaluation to their parent, so their call counter is the root's counter and
// only cache misses at the root are counted.
class SetFunctionOracle {
 public:
  SetFunctionOracle(GroundSet ground, std::shared_ptr<const SetFunction> fn,
                    OracleOptions options = {});

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }

  // f(X) - f_raw(empty). Throws InvalidSubsetError if X is not a subset of
  // this ground set.
  Rational Evaluate(const Subset& x) const;

  // Number of evaluations that reached the underlying function.
  int64_t calls() const;

  // f_raw(empty), subtracted from every raw value.
  const Rational& offset() const { return offset_; }

  bool integer_valued() const { return integer_valued_; }

  // Builds an oracle on `ground` whose values come from `eval`, sharing the
  // call counter of `parent`. `eval` must return 0 on the empty set.
  static SetFunctionOracle Derive(
      const SetFunctionOracle& parent, GroundSet ground,
      std::function<Rational(const Subset&)> eval, bool integer_valued);

 private:
  class Cache;
  SetFunctionOracle() = default;

  GroundSet ground_;
  std::function<Rational(const Subset&)> eval_;
  Rational offset_;
  bool integer_valued_ = false;
  bool root_ = true;
  std::shared_ptr<std::atomic<int64_t>> counter_;
  std::shared_ptr<Cache> cache_;
};

// M = max{|y^-(V)|, sum_v max{0, f({v})}} where y is the greedy base of
// `order`. Every |f(X)| is at most M.
Rational UpperBoundM(const SetFunctionOracle& f, const LinearOrdering& order);

// g(X) = f(X + R) - f(R) on the ground set V \ R (labels keep their order).
SetFunctionOracle RestrictAbove(const SetFunctionOracle& f, const Subset& r);

// If f(V) > 0 returns f with f(V) replaced by 0 and true; otherwise f and
// false.
std::pair<SetFunctionOracle, bool> ClampTop(const SetFunctionOracle& f);

// f with f(V) replaced by `top`. Submodular whenever top <= f(V).
SetFunctionOracle OverrideTop(const SetFunctionOracle& f, Rational top);

// factor * f. factor must be positive.
SetFunctionOracle Scale(const SetFunctionOracle& f, const Rational& factor);

// View of f whose elements stand for disjoint groups of f's elements:
// g(X) = f(base + union of groups[i], i in X) - f(base).
SetFunctionOracle GroupView(const SetFunctionOracle& f, const Subset& base,
                            std::vector<Subset> groups, GroundSet labels);

// Exhaustively checks f(X) + f(Y) >= f(X | Y) + f(X & Y) via the equivalent
// local condition on pairs X + i, X + j. Returns the first violating pair, if
// any. Cost is O(2^n n^2) evaluations.
std::optional<std::pair<Subset, Subset>> FindSubmodularityViolation(
    const SetFunction& f);
std::optional<std::pair<Subset, Subset>> FindSubmodularityViolation(
    const SetFunctionOracle& f);

}  // namespace sfm

#endif  // SFM_ORACLE_H_
