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

#include "sfm/verify.h"

#include <optional>

#include "sfm/errors.h"

namespace sfm {

BruteForceResult BruteForceMin(const SetFunctionOracle& f) {
  const int n = f.size();
  if (n > kBruteForceMaxSize) {
    throw InvalidArgumentError("brute force refused for n > 24");
  }
  BruteForceResult r;
  bool first = true;
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t m = 0; m < count; ++m) {
    Subset x = Subset::FromMask(n, m);
    Rational value = f.Evaluate(x);
    if (first || value < r.value) {
      r.value = std::move(value);
      r.minimizer = x;
      r.all_minimizers.clear();
      r.all_minimizers.push_back(std::move(x));
      first = false;
    } else if (value == r.value) {
      r.all_minimizers.push_back(std::move(x));
    }
  }
  return r;
}

namespace {

CertificateReport Fail(std::string clause, std::string detail) {
  return {false, std::move(clause), std::move(detail)};
}

}  // namespace

CertificateReport CheckCertificate(const SetFunctionOracle& f,
                                   const Certificate& c,
                                   const Rational& epsilon) {
  const int n = f.size();
  const std::size_t m = c.lambda.size();
  if (m == 0 || c.bases.size() != m || c.minimizer.universe() != n ||
      c.phi.size() != static_cast<std::size_t>(n)) {
    return Fail("shape", "certificate sizes do not match the ground set");
  }
  for (const auto& b : c.bases) {
    if (b.ordering.size() != static_cast<std::size_t>(n) ||
        b.y.size() != static_cast<std::size_t>(n)) {
      return Fail("shape", "base of the wrong dimension");
    }
  }
  for (const auto& row : c.phi) {
    if (row.size() != static_cast<std::size_t>(n)) {
      return Fail("shape", "flow matrix is not n x n");
    }
  }

  Rational total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(c.lambda[i]) <= 0) {
      return Fail("positivity", "lambda[" + std::to_string(i) + "] <= 0");
    }
    total += c.lambda[i];
  }
  if (total != 1) {
    return Fail("sum", "lambda sums to " + FormatRational(total));
  }

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<bool> seen(n, false);
    for (int v : c.bases[i].ordering) {
      if (v < 0 || v >= n || seen[v]) {
        return Fail("ordering",
                    "ordering " + std::to_string(i) + " is not a permutation");
      }
      seen[v] = true;
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    Subset prefix(n);
    Rational previous = 0;
    for (int v : c.bases[i].ordering) {
      prefix.Insert(v);
      const Rational value = f.Evaluate(prefix);
      if (c.bases[i].y[v] != value - previous) {
        return Fail("greedy", "base " + std::to_string(i) +
                                  " differs from the greedy base at element " +
                                  std::to_string(v));
      }
      previous = value;
    }
  }

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (c.phi[u][v] + c.phi[v][u] != 0) {
        return Fail("skew", "phi(" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not antisymmetric");
      }
    }
  }

  Rational x_minus = 0;
  for (int v = 0; v < n; ++v) {
    Rational xv = 0;
    for (std::size_t i = 0; i < m; ++i) xv += c.lambda[i] * c.bases[i].y[v];
    x_minus += NegativePart(xv);
  }
  const Rational gap = f.Evaluate(c.minimizer) - x_minus;
  if (gap != c.gap) {
    return Fail("gap", "claimed gap " + FormatRational(c.gap) + ", actual " +
                           FormatRational(gap));
  }
  if (gap >= epsilon) {
    return Fail("bound", "gap " + FormatRational(gap) + " is not below " +
                             FormatRational(epsilon));
  }
  return {};
}

bool InBasePolyhedron(const SetFunctionOracle& f,
                      const std::vector<Rational>& y) {
  const int n = f.size();
  if (n > kBruteForceMaxSize || y.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("base membership needs n <= 24 and |y| = n");
  }
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t mask = 1; mask < count; ++mask) {
    Rational y_of_x = 0;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) y_of_x += y[v];
    }
    const Rational value = f.Evaluate(Subset::FromMask(n, mask));
    if (y_of_x > value) return false;
    if (mask == count - 1 && y_of_x != value) return false;
  }
  return true;
}

Rational ExchangeCapacityBruteForce(const SetFunctionOracle& f,
                                    const std::vector<Rational>& y, int u,
                                    int v) {
  const int n = f.size();
  if (n > 16) throw InvalidArgumentError("exchange brute force needs n <= 16");
  if (u == v || u < 0 || v < 0 || u >= n || v >= n) {
    throw InvalidArgumentError("exchange pair must be two distinct elements");
  }
  if (!InBasePolyhedron(f, y)) {
    throw InvalidArgumentError("vector is not in the base polyhedron");
  }
  std::optional<Rational> best;
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t mask = 0; mask < count; ++mask) {
    if (!(mask >> u & 1) || (mask >> v & 1)) continue;
    Rational slack = f.Evaluate(Subset::FromMask(n, mask));
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1) slack -= y[e];
    }
    if (!best || slack < *best) best = std::move(slack);
  }
  return *best;
}

}  // namespace sfm
