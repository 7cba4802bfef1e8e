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

#include "sfm/base.h"

#include <optional>

#include "sfm/errors.h"

namespace sfm {

ExtremeBase GreedyExtremeBase(const SetFunctionOracle& f,
                              const LinearOrdering& order) {
  const int n = f.size();
  if (order.size() != n) {
    throw InvalidArgumentError("ordering size does not match ground set");
  }
  ExtremeBase b;
  b.ordering = order;
  b.y.assign(n, Rational(0));
  b.prefix_values.reserve(n);
  Subset prefix(n);
  Rational previous = 0;
  for (int k = 0; k < n; ++k) {
    const int v = order.at(k);
    prefix.Insert(v);
    Rational value = f.Evaluate(prefix);
    b.y[v] = value - previous;
    previous = value;
    b.prefix_values.push_back(std::move(value));
  }
  return b;
}

Rational ExchangeCapacityConsecutive(const SetFunctionOracle& f,
                                     const ExtremeBase& b, int k) {
  const int n = b.ordering.size();
  if (k < 1 || k >= n) {
    throw InvalidArgumentError("exchange position out of range");
  }
  const int v = b.ordering.at(k - 1);
  Subset without_v = b.ordering.Prefix(k);
  without_v.Erase(v);
  return f.Evaluate(without_v) - b.prefix_values[k] + b.y[v];
}

ExtremeBase ApplyInterchange(ExtremeBase b, int k, const Rational& beta) {
  const int n = b.ordering.size();
  if (k < 1 || k >= n) {
    throw InvalidArgumentError("exchange position out of range");
  }
  const int v = b.ordering.at(k - 1);
  const int u = b.ordering.at(k);
  // After the swap u sits at k-1, and f(L(u) - v) = beta + f(L(u)) - y(v).
  b.prefix_values[k - 1] = beta + b.prefix_values[k] - b.y[v];
  b.y[u] += beta;
  b.y[v] -= beta;
  b.ordering.SwapAdjacent(k);
  return b;
}

ConvexCombination::ConvexCombination(ExtremeBase single) {
  x = single.y;
  entries.push_back({Rational(1), std::move(single)});
}

std::vector<Rational> ConvexCombination::Sum() const {
  const int n = entries.empty() ? 0 : static_cast<int>(entries[0].base.y.size());
  std::vector<Rational> sum(n, Rational(0));
  for (const auto& e : entries) {
    for (int v = 0; v < n; ++v) sum[v] += e.lambda * e.base.y[v];
  }
  return sum;
}

void ConvexCombination::CheckInvariants() const {
  if (entries.empty()) {
    throw InternalInvariantError("convex combination is empty");
  }
  Rational total = 0;
  for (const auto& e : entries) {
    if (sgn(e.lambda) <= 0) {
      throw InternalInvariantError("convex combination has weight <= 0");
    }
    total += e.lambda;
  }
  if (total != 1) {
    throw InternalInvariantError("convex combination weights do not sum to 1");
  }
  if (Sum() != x) {
    throw InternalInvariantError("convex combination x is stale");
  }
}

namespace {

// Finds mu != 0 with sum_j mu_j (y_j, 1) = 0, or nullopt when the lifted
// points are linearly independent. Columns are the lifted points; rows are
// reduced with partial pivoting on the largest magnitude, ties to the lowest
// row.
std::optional<std::vector<Rational>> AffineDependency(
    const ConvexCombination& c) {
  const int m = c.size();
  const int n = static_cast<int>(c.x.size());
  const int rows = n + 1;
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(m));
  for (int j = 0; j < m; ++j) {
    for (int v = 0; v < n; ++v) a[v][j] = c.entries[j].base.y[v];
    a[n][j] = 1;
  }
  std::vector<int> pivot_row_of_col(m, -1);
  std::vector<int> pivot_cols;
  int row = 0;
  for (int j = 0; j < m; ++j) {
    int best = -1;
    for (int r = row; r < rows; ++r) {
      if (sgn(a[r][j]) == 0) continue;
      if (best == -1 || abs(a[r][j]) > abs(a[best][j])) best = r;
    }
    if (best == -1) {
      // Column j is a combination of earlier pivot columns: back-substitute.
      std::vector<Rational> mu(m, Rational(0));
      mu[j] = 1;
      for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
        const int pc = *it;
        const int pr = pivot_row_of_col[pc];
        Rational s = a[pr][j];
        for (int q : pivot_cols) {
          if (q > pc) s += a[pr][q] * mu[q];
        }
        mu[pc] = -s / a[pr][pc];
      }
      return mu;
    }
    std::swap(a[row], a[best]);
    for (int r = row + 1; r < rows; ++r) {
      if (sgn(a[r][j]) == 0) continue;
      const Rational factor = a[r][j] / a[row][j];
      for (int q = j; q < m; ++q) a[r][q] -= factor * a[row][q];
    }
    pivot_row_of_col[j] = row;
    pivot_cols.push_back(j);
    ++row;
  }
  return std::nullopt;
}

}  // namespace

ConvexCombination ReduceCombination(ConvexCombination c) {
  while (c.size() > 1) {
    auto mu = AffineDependency(c);
    if (!mu) break;
    bool any_positive = false;
    for (const auto& v : *mu) any_positive |= sgn(v) > 0;
    if (!any_positive) {
      for (auto& v : *mu) v = -v;
    }
    std::optional<Rational> theta;
    for (int i = 0; i < c.size(); ++i) {
      if (sgn((*mu)[i]) <= 0) continue;
      Rational ratio = c.entries[i].lambda / (*mu)[i];
      if (!theta || ratio < *theta) theta = std::move(ratio);
    }
    std::vector<CombinationEntry> kept;
    kept.reserve(c.entries.size());
    for (int i = 0; i < c.size(); ++i) {
      c.entries[i].lambda -= *theta * (*mu)[i];
      if (sgn(c.entries[i].lambda) != 0) kept.push_back(std::move(c.entries[i]));
    }
    c.entries = std::move(kept);
  }
  return c;
}

}  // namespace sfm
