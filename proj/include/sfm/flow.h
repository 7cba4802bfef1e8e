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

#ifndef SFM_FLOW_H_
#define SFM_FLOW_H_

#include <optional>
#include <span>
#include <vector>

#include "sfm/rational.h"
#include "sfm/subset.h"

namespace sfm {

// Skew-symmetric flow on the complete digraph over n vertices. Only the
// entries above the diagonal are stored; phi(v, u) is derived as -phi(u, v),
// so skew-symmetry holds by construction.
class Flow {
 public:
  Flow() = default;
  explicit Flow(int n);

  int size() const { return n_; }

  Rational Get(int u, int v) const;
  void Set(int u, int v, const Rational& value);
  // phi(u, v) += amount and phi(v, u) -= amount.
  void Add(int u, int v, const Rational& amount);

  // Sign of phi(u, v) without copying the value.
  int Sign(int u, int v) const;
  // (u, v) is an arc of the residual graph: u != v and phi(u, v) <= 0.
  bool Residual(int u, int v) const { return u != v && Sign(u, v) <= 0; }

  // -delta <= phi(u, v) <= delta for every pair.
  bool IsFeasible(const Rational& delta) const;

  std::vector<std::vector<Rational>> ToMatrix() const;

 private:
  int Slot(int u, int v) const;  // requires u < v

  int n_ = 0;
  std::vector<Rational> upper_;
};

// d(v) = sum_u phi(u, v).
std::vector<Rational> Boundary(const Flow& phi);

// Moves every entry to the nearest value in [-delta, delta].
void Clamp(Flow& phi, const Rational& delta);

// Vertices reachable from `sources` along residual arcs, breadth-first with
// lower indices explored first. Contains `sources`.
Subset ResidualReachable(const Flow& phi, const Subset& sources);

// A shortest residual path from `sources` to `sinks` as a vertex sequence,
// breadth-first with smallest-index tie-breaking, or nullopt.
std::optional<std::vector<int>> FindAugmentingPath(const Flow& phi,
                                                   const Subset& sources,
                                                   const Subset& sinks);

// Sends delta along `path`. Throws InternalInvariantError if an arc of the
// path is not residual or the result would leave [-delta, delta].
void Augment(Flow& phi, std::span<const int> path, const Rational& delta);

}  // namespace sfm

#endif  // SFM_FLOW_H_
