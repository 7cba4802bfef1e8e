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

#include "sfm/oracle.h"

#include <list>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "sfm/errors.h"

namespace sfm {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw InvalidArgumentError("duplicate ground set label '" + l + "'");
    }
  }
}

GroundSet GroundSet::Indexed(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::IndexOf(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

// Bounded least-recently-used map from subsets to normalized values.
class SetFunctionOracle::Cache {
 public:
  explicit Cache(std::size_t capacity) : capacity_(capacity) {}

  std::optional<Rational> Get(const Subset& x) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    order_.splice(order_.begin(), order_, it->second);
    return it->second->second;
  }

  void Put(const Subset& x, const Rational& value) {
    std::lock_guard<std::mutex> lock(mu_);
    if (capacity_ == 0 || index_.count(x) != 0) return;
    order_.emplace_front(x, value);
    index_.emplace(x, order_.begin());
    if (index_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }

 private:
  using Entry = std::pair<Subset, Rational>;
  std::size_t capacity_;
  std::mutex mu_;
  std::list<Entry> order_;
  std::unordered_map<Subset, std::list<Entry>::iterator, SubsetHash> index_;
};

SetFunctionOracle::SetFunctionOracle(GroundSet ground,
                                     std::shared_ptr<const SetFunction> fn,
                                     OracleOptions options)
    : ground_(std::move(ground)),
      integer_valued_(fn->IntegerValued()),
      counter_(std::make_shared<std::atomic<int64_t>>(0)) {
  if (fn->size() != ground_.size()) {
    throw InvalidArgumentError("set function size does not match ground set");
  }
  eval_ = [fn](const Subset& x) { return fn->Evaluate(x); };
  offset_ = eval_(Subset(ground_.size()));
  if (options.cache) cache_ = std::make_shared<Cache>(options.cache_capacity);
}

SetFunctionOracle SetFunctionOracle::Derive(
    const SetFunctionOracle& parent, GroundSet ground,
    std::function<Rational(const Subset&)> eval, bool integer_valued) {
  SetFunctionOracle o;
  o.ground_ = std::move(ground);
  o.eval_ = std::move(eval);
  o.offset_ = 0;
  o.integer_valued_ = integer_valued;
  o.root_ = false;
  o.counter_ = parent.counter_;
  return o;
}

Rational SetFunctionOracle::Evaluate(const Subset& x) const {
  if (x.universe() != size()) {
    throw InvalidSubsetError("subset over " + std::to_string(x.universe()) +
                             " elements passed to an oracle over " +
                             std::to_string(size()));
  }
  if (!root_) return eval_(x);
  if (cache_) {
    if (auto hit = cache_->Get(x)) return *std::move(hit);
  }
  Rational value = eval_(x) - offset_;
  counter_->fetch_add(1, std::memory_order_relaxed);
  if (cache_) cache_->Put(x, value);
  return value;
}

int64_t SetFunctionOracle::calls() const {
  return counter_->load(std::memory_order_relaxed);
}

Rational UpperBoundM(const SetFunctionOracle& f, const LinearOrdering& order) {
  const int n = f.size();
  Rational negative_sum = 0;
  Rational previous = 0;
  Subset prefix(n);
  for (int k = 0; k < n; ++k) {
    prefix.Insert(order.at(k));
    Rational value = f.Evaluate(prefix);
    negative_sum += NegativePart(value - previous);
    previous = std::move(value);
  }
  Rational positive_singletons = 0;
  for (int v = 0; v < n; ++v) {
    Subset single(n);
    single.Insert(v);
    Rational value = f.Evaluate(single);
    if (sgn(value) > 0) positive_singletons += value;
  }
  Rational m = abs(negative_sum);
  return m > positive_singletons ? m : positive_singletons;
}

SetFunctionOracle RestrictAbove(const SetFunctionOracle& f, const Subset& r) {
  const Subset rest = r.Complement();
  std::vector<Subset> groups;
  std::vector<std::string> labels;
  for (int v : rest.Indices()) {
    Subset g(f.size());
    g.Insert(v);
    groups.push_back(std::move(g));
    labels.push_back(f.ground().label(v));
  }
  return GroupView(f, r, std::move(groups), GroundSet(std::move(labels)));
}

SetFunctionOracle OverrideTop(const SetFunctionOracle& f, Rational top) {
  const int n = f.size();
  const bool integral = f.integer_valued() && IsInteger(top);
  return SetFunctionOracle::Derive(
      f, f.ground(),
      [f, n, top = std::move(top)](const Subset& x) {
        if (n > 0 && x.Count() == n) return top;
        return f.Evaluate(x);
      },
      integral);
}

std::pair<SetFunctionOracle, bool> ClampTop(const SetFunctionOracle& f) {
  if (f.size() > 0 && sgn(f.Evaluate(Subset::Full(f.size()))) > 0) {
    return {OverrideTop(f, Rational(0)), true};
  }
  return {f, false};
}

SetFunctionOracle Scale(const SetFunctionOracle& f, const Rational& factor) {
  if (sgn(factor) <= 0) {
    throw InvalidArgumentError("scale factor must be positive");
  }
  return SetFunctionOracle::Derive(
      f, f.ground(),
      [f, factor](const Subset& x) { return Rational(f.Evaluate(x) * factor); },
      f.integer_valued() && IsInteger(factor));
}

SetFunctionOracle GroupView(const SetFunctionOracle& f, const Subset& base,
                            std::vector<Subset> groups, GroundSet labels) {
  if (static_cast<int>(groups.size()) != labels.size()) {
    throw InvalidArgumentError("group view needs one label per group");
  }
  Subset seen = base;
  for (const auto& g : groups) {
    if (g.universe() != f.size() || seen.Intersects(g)) {
      throw InvalidArgumentError("group view groups must be disjoint");
    }
    seen |= g;
  }
  Rational base_value = f.Evaluate(base);
  return SetFunctionOracle::Derive(
      f, std::move(labels),
      [f, base, groups = std::move(groups),
       base_value = std::move(base_value)](const Subset& x) {
        Subset lifted = base;
        for (int i : x.Indices()) lifted |= groups[i];
        return Rational(f.Evaluate(lifted) - base_value);
      },
      f.integer_valued());
}

namespace {

template <typename Eval>
std::optional<std::pair<Subset, Subset>> LocalSubmodularityCheck(int n,
                                                                 Eval eval) {
  if (n > 30) throw InvalidArgumentError("exhaustive check needs n <= 30");
  const uint64_t count = uint64_t{1} << n;
  std::vector<Rational> values(count);
  for (uint64_t m = 0; m < count; ++m) values[m] = eval(m);
  for (uint64_t m = 0; m < count; ++m) {
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1) continue;
      for (int j = i + 1; j < n; ++j) {
        if (m >> j & 1) continue;
        const uint64_t a = m | uint64_t{1} << i;
        const uint64_t b = m | uint64_t{1} << j;
        if (values[a] + values[b] < values[a | b] + values[m]) {
          return std::make_pair(Subset::FromMask(n, a), Subset::FromMask(n, b));
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Subset, Subset>> FindSubmodularityViolation(
    const SetFunction& f) {
  const int n = f.size();
  return LocalSubmodularityCheck(
      n, [&](uint64_t m) { return f.Evaluate(Subset::FromMask(n, m)); });
}

std::optional<std::pair<Subset, Subset>> FindSubmodularityViolation(
    const SetFunctionOracle& f) {
  const int n = f.size();
  return LocalSubmodularityCheck(
      n, [&](uint64_t m) { return f.Evaluate(Subset::FromMask(n, m)); });
}

}  // namespace sfm
