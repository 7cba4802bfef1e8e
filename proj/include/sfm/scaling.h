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

#ifndef SFM_SCALING_H_
#define SFM_SCALING_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "sfm/base.h"
#include "sfm/certificate.h"
#include "sfm/flow.h"
#include "sfm/oracle.h"
#include "sfm/rational.h"
#include "sfm/subset.h"

namespace sfm {

struct SolverOptions {
  // Positive lower bound on the gap between the smallest and second smallest
  // value of f. The solver then runs on (1/epsilon) f. Unset means 1, which
  // is right for integer-valued f.
  std::optional<Rational> epsilon;
  // Check the solver's internal invariants (z-invariance across pushes,
  // tightness at phase exits, per-phase augmentation bound, combination
  // weights) and throw InternalInvariantError on a violation.
  bool check_invariants = true;
  bool record_trace = false;
};

struct SolveStats {
  int64_t oracle_calls = 0;
  int64_t phases = 0;
  int64_t augmentations = 0;
  int64_t pushes = 0;
  int64_t saturating_pushes = 0;
  int64_t nonsaturating_pushes = 0;
  int64_t reductions = 0;
  int64_t max_phase_augmentations = 0;
  int64_t max_combination_size = 0;
  // Value bound M of the (scaled) function; zero for the strong solver.
  Rational bound_m;
  // Strong solver only.
  int64_t fix_calls = 0;
  int64_t arcs_added = 0;
  int64_t contractions = 0;
  int64_t deletions = 0;
};

enum class PhaseExit { kNoSources, kNoSinks, kNoActivePair };

enum class TraceKind { kPhaseBegin, kPhaseEnd, kPush, kAugment };

// One step of a scaling run. All rationals are in the units the solver runs
// in (that is, of (1/epsilon) f).
struct TraceEvent {
  TraceKind kind = TraceKind::kPhaseBegin;
  int64_t phase = 0;
  Rational delta;
  Rational z_minus_before;
  Rational z_minus_after;
  // kPush and kAugment: z = x - boundary(phi) around the step.
  std::vector<Rational> z_before;
  std::vector<Rational> z_after;
  // kPush
  int index = -1;
  int u = -1;
  int v = -1;
  Rational capacity;
  Rational alpha;
  bool saturating = false;
  bool z_unchanged = true;
  // kAugment
  std::vector<int> path;
  // kPhaseEnd
  PhaseExit exit = PhaseExit::kNoActivePair;
  int64_t augmentations = 0;
  Subset reachable;
  Rational x_of_reachable;
};

struct SfmResult {
  Subset minimizer;
  // f(minimizer) in the caller's units, f(empty) offset included.
  Rational value;
  // f(minimizer) - x^-(V) for the certificate's x, f normalized.
  Rational gap;
  std::optional<Certificate> certificate;
  SolveStats stats;
  std::vector<TraceEvent> trace;
};

// The last v outside W in `order` that has an element of W after it, if any.
std::optional<int> ActiveVertex(const LinearOrdering& order, const Subset& w);

struct ActivePair {
  int index = -1;   // entry of the convex combination
  int vertex = -1;  // v, outside W
};

// State of the scaling algorithm: a base x kept as a convex combination of
// extreme bases, a delta-feasible flow phi, z = x - boundary(phi), and the
// sets
//   S = {v : z(v) <= -delta},  T = {v : z(v) >= delta},
//   W = vertices reachable from S in the residual graph of phi.
class ScalingState {
 public:
  ScalingState(SetFunctionOracle f, ExtremeBase initial, Rational delta,
               SolverOptions options = {});

  // Halves delta, clamps phi into [-delta, delta] and recomputes S, T, W.
  void BeginPhase();

  // Pushes along active pairs and augments along S-T paths until S or T is
  // empty or, with no path left, no active pair remains.
  PhaseExit RunPhase();

  // The active pair with the smallest combination index: for entry i, the
  // last v outside W in L_i such that some element of W comes after v.
  std::optional<ActivePair> FindActivePair() const;

  // Push(i, u, v) for u immediately after v in L_i.
  void Push(int i, int u, int v);

  // Empty if S is empty, V if T is empty, W otherwise.
  Subset OutputSet() const;

  // Recomputes S, T and W from x and phi.
  void Refresh();

  const SetFunctionOracle& function() const { return f_; }
  const Rational& delta() const { return delta_; }
  const ConvexCombination& combination() const { return comb_; }
  const Flow& flow() const { return phi_; }
  const Subset& sources() const { return s_; }
  const Subset& sinks() const { return t_; }
  const Subset& reachable() const { return w_; }
  const SolveStats& stats() const { return stats_; }
  const std::vector<TraceEvent>& trace() const { return trace_; }
  std::vector<TraceEvent> TakeTrace() { return std::move(trace_); }

  // z = x - boundary(phi) and its negative part.
  std::vector<Rational> Z() const;
  Rational ZMinus() const;

 private:
  void Augment();
  void Reduce();
  void CheckTightReachable() const;

  SetFunctionOracle f_;
  SolverOptions options_;
  int n_;
  Rational delta_;
  ConvexCombination comb_;
  Flow phi_;
  Subset s_, t_, w_;
  SolveStats stats_;
  std::vector<TraceEvent> trace_;
  int64_t phase_augmentations_ = 0;
};

// Minimizes f with the capacity-scaling algorithm: start from the greedy
// base of the identity ordering and delta = M, halve delta at the top of each
// phase while delta >= 1/n^2. Throws InvalidArgumentError for n = 0.
SfmResult Sfm(const SetFunctionOracle& f, const SolverOptions& options = {});

// Adds the counters of `from` into `into` (max fields take the max).
void AccumulateStats(SolveStats& into, const SolveStats& from);

}  // namespace sfm

#endif  // SFM_SCALING_H_
