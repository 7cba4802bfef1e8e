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

#ifndef SFM_STRONG_H_
#define SFM_STRONG_H_

#include <utility>
#include <vector>

#include "sfm/base.h"
#include "sfm/oracle.h"
#include "sfm/rational.h"
#include "sfm/scaling.h"
#include "sfm/subset.h"

namespace sfm {

// Acyclic graph D = (V', F) of compatible pairs over the current vertices.
// Each current vertex stands for a nonempty set of original elements; an arc
// (u, w) means every minimizer containing u also contains w.
class PrecedenceDag {
 public:
  explicit PrecedenceDag(int original_size);

  int size() const { return static_cast<int>(represents_.size()); }
  int original_size() const { return original_size_; }
  const Subset& represents(int v) const { return represents_[v]; }
  const std::vector<Subset>& groups() const { return represents_; }

  bool HasArc(int u, int w) const { return arcs_[u][w]; }
  // Adds (u, w) even if it closes a cycle; Contract restores acyclicity.
  void AddArc(int u, int w);

  // R(v): vertices reachable from v, v included. Depth-first.
  Subset Reachable(int v) const;
  bool IsAcyclic() const;

  // The vertices of `among` ordered so that each comes after every vertex of
  // `among` it has an arc to; ties go to the smallest index. Throws
  // InternalInvariantError on a cycle.
  std::vector<int> ConsistentOrder(const Subset& among) const;
  std::vector<int> ConsistentOrder() const;

  // Merges the strongly connected set `component` into one vertex placed at
  // its smallest index; later vertices shift down. Throws
  // InvalidArgumentError if `component` is not strongly connected.
  void Contract(const Subset& component);

  // Deletes `vertices` and their arcs; later vertices shift down.
  void Remove(const Subset& vertices);

  // Original elements represented by `vertices`.
  Subset Expand(const Subset& vertices) const;

 private:
  int original_size_;
  std::vector<Subset> represents_;
  std::vector<std::vector<bool>> arcs_;
};

struct EtaResult {
  Rational eta;
  int argmax = -1;
  // f(R(v)) - f(R(v) - v) for every vertex.
  std::vector<Rational> marginals;
};

// eta = max over v of f(R(v)) - f(R(v) - v), attained first at `argmax`.
// f is defined over the dag's current vertices. 2|V'| oracle calls.
EtaResult Eta(const SetFunctionOracle& f, const PrecedenceDag& dag);

// Greedy base of the consistent ordering of the dag (reverse topological,
// smallest index first). With `check`, asserts
// x(v) <= f(R(v)) - f(R(v) - v) for all v.
ExtremeBase ConsistentExtremeBase(const SetFunctionOracle& f,
                                  const PrecedenceDag& dag, bool check = true);

// Runs scaling phases from the extreme base x0 with delta = eta, halving at
// each phase, until delta < kappa / n^3 with kappa = eta / 2 and n = |V| of
// f. Returns the element with the most negative x (lowest index on ties),
// which then has x(w) < -n^2 delta and lies in every minimizer of f.
//
// Requires eta > 0, x0 <= eta componentwise, and some Y with
// f(Y) <= -eta / 2; throws PreconditionError when the final x has no
// element below -n^2 delta. Scaling counters are added to `stats`.
int Fix(const SetFunctionOracle& f, const ExtremeBase& x0, const Rational& eta,
        const SolverOptions& options = {}, SolveStats* stats = nullptr);

// Records of a strong solve, for external verification.
struct FixRecord {
  SetFunctionOracle function;  // the function Fix ran on
  int returned = -1;           // index into function's ground set
};

struct ArcRecord {
  SetFunctionOracle function;  // current function over the dag vertices
  int from = -1;
  int to = -1;
};

struct ConsistentBaseRecord {
  SetFunctionOracle function;  // current function over the dag vertices
  std::vector<int> vertices;   // base coordinate j -> dag vertex
  std::vector<Rational> y;
  std::vector<Subset> reach;   // R(v) for every dag vertex
};

struct StrongLog {
  std::vector<FixRecord> fixes;
  std::vector<ArcRecord> arcs;
  std::vector<ConsistentBaseRecord> bases;
};

// Strongly polynomial minimization: repeatedly clamps f(V') to at most 0,
// computes eta over the dag, and either learns a compatible arc (possibly
// contracting a cycle) or fixes a set of elements that lies in every
// minimizer. The certificate, when requested, comes from a scaling run on f
// and is attached to the strong minimizer.
SfmResult StrongSfm(const SetFunctionOracle& f,
                    const SolverOptions& options = {},
                    StrongLog* log = nullptr, bool certify = true);

}  // namespace sfm

#endif  // SFM_STRONG_H_
