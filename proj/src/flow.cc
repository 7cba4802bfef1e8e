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

#include "sfm/flow.h"

#include <deque>

#include "sfm/errors.h"

namespace sfm {

Flow::Flow(int n) : n_(n), upper_(static_cast<std::size_t>(n) * (n - 1) / 2) {}

int Flow::Slot(int u, int v) const {
  // Row-major upper triangle without the diagonal.
  return u * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

Rational Flow::Get(int u, int v) const {
  if (u == v) return 0;
  if (u < v) return upper_[Slot(u, v)];
  return -upper_[Slot(v, u)];
}

int Flow::Sign(int u, int v) const {
  if (u == v) return 0;
  if (u < v) return sgn(upper_[Slot(u, v)]);
  return -sgn(upper_[Slot(v, u)]);
}

void Flow::Set(int u, int v, const Rational& value) {
  if (u == v) {
    if (sgn(value) != 0) {
      throw InternalInvariantError("flow on a loop must be zero");
    }
    return;
  }
  if (u < v) {
    upper_[Slot(u, v)] = value;
  } else {
    upper_[Slot(v, u)] = -value;
  }
}

void Flow::Add(int u, int v, const Rational& amount) {
  if (u == v) return;
  if (u < v) {
    upper_[Slot(u, v)] += amount;
  } else {
    upper_[Slot(v, u)] -= amount;
  }
}

bool Flow::IsFeasible(const Rational& delta) const {
  for (const Rational& value : upper_) {
    if (abs(value) > delta) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> Flow::ToMatrix() const {
  std::vector<std::vector<Rational>> m(n_, std::vector<Rational>(n_));
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) m[u][v] = Get(u, v);
  }
  return m;
}

std::vector<Rational> Boundary(const Flow& phi) {
  const int n = phi.size();
  std::vector<Rational> d(n, Rational(0));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Rational value = phi.Get(u, v);
      d[v] += value;
      d[u] -= value;
    }
  }
  return d;
}

void Clamp(Flow& phi, const Rational& delta) {
  const int n = phi.size();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Rational value = phi.Get(u, v);
      if (value > delta) {
        phi.Set(u, v, delta);
      } else if (value < -delta) {
        phi.Set(u, v, -delta);
      }
    }
  }
}

namespace {

// Breadth-first search over residual arcs. parent[v] = -1 for sources and
// -2 for unreached vertices.
std::vector<int> ResidualBfs(const Flow& phi, const Subset& sources,
                             const Subset* stop_at, int* reached_sink) {
  const int n = phi.size();
  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  for (int s : sources.Indices()) {
    parent[s] = -1;
    queue.push_back(s);
    if (stop_at != nullptr && stop_at->Contains(s)) {
      *reached_sink = s;
      return parent;
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < n; ++v) {
      if (parent[v] != -2 || !phi.Residual(u, v)) continue;
      parent[v] = u;
      if (stop_at != nullptr && stop_at->Contains(v)) {
        *reached_sink = v;
        return parent;
      }
      queue.push_back(v);
    }
  }
  return parent;
}

}  // namespace

Subset ResidualReachable(const Flow& phi, const Subset& sources) {
  const std::vector<int> parent = ResidualBfs(phi, sources, nullptr, nullptr);
  Subset reached(phi.size());
  for (int v = 0; v < phi.size(); ++v) {
    if (parent[v] != -2) reached.Insert(v);
  }
  return reached;
}

std::optional<std::vector<int>> FindAugmentingPath(const Flow& phi,
                                                   const Subset& sources,
                                                   const Subset& sinks) {
  int sink = -1;
  const std::vector<int> parent = ResidualBfs(phi, sources, &sinks, &sink);
  if (sink == -1) return std::nullopt;
  std::vector<int> path;
  for (int v = sink; v != -1; v = parent[v]) path.push_back(v);
  return std::vector<int>(path.rbegin(), path.rend());
}

void Augment(Flow& phi, std::span<const int> path, const Rational& delta) {
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (!phi.Residual(path[k], path[k + 1])) {
      throw InternalInvariantError("augmenting along a non-residual arc");
    }
  }
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    phi.Add(path[k], path[k + 1], delta);
    if (phi.Get(path[k], path[k + 1]) > delta) {
      throw InternalInvariantError("augmentation broke delta-feasibility");
    }
  }
}

}  // namespace sfm
