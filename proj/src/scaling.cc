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

#include "sfm/scaling.h"

#include <algorithm>
#include <string>
#include <utility>

#include "sfm/errors.h"

namespace sfm {

ScalingState::ScalingState(SetFunctionOracle f, ExtremeBase initial,
                           Rational delta, SolverOptions options)
    : f_(std::move(f)),
      options_(std::move(options)),
      n_(f_.size()),
      delta_(std::move(delta)),
      comb_(std::move(initial)),
      phi_(n_),
      s_(n_),
      t_(n_),
      w_(n_) {
  if (comb_.entries[0].base.ordering.size() != n_) {
    throw InvalidArgumentError("initial base does not match the ground set");
  }
  stats_.max_combination_size = 1;
  Refresh();
}

std::vector<Rational> ScalingState::Z() const {
  std::vector<Rational> z = comb_.x;
  const std::vector<Rational> d = Boundary(phi_);
  for (int v = 0; v < n_; ++v) z[v] -= d[v];
  return z;
}

Rational ScalingState::ZMinus() const {
  Rational total = 0;
  for (const Rational& value : Z()) total += NegativePart(value);
  return total;
}

void ScalingState::Refresh() {
  const std::vector<Rational> z = Z();
  s_ = Subset(n_);
  t_ = Subset(n_);
  for (int v = 0; v < n_; ++v) {
    if (z[v] <= -delta_) s_.Insert(v);
    if (z[v] >= delta_) t_.Insert(v);
  }
  w_ = ResidualReachable(phi_, s_);
}

void ScalingState::BeginPhase() {
  delta_ /= 2;
  Clamp(phi_, delta_);
  Refresh();
  ++stats_.phases;
  phase_augmentations_ = 0;
  if (options_.record_trace) {
    TraceEvent e;
    e.kind = TraceKind::kPhaseBegin;
    e.phase = stats_.phases;
    e.delta = delta_;
    e.z_minus_after = ZMinus();
    trace_.push_back(std::move(e));
  }
}

std::optional<int> ActiveVertex(const LinearOrdering& order, const Subset& w) {
  const int n = order.size();
  int last_in_w = -1;
  for (int k = n - 1; k >= 0; --k) {
    if (w.Contains(order.at(k))) {
      last_in_w = k;
      break;
    }
  }
  for (int k = last_in_w - 1; k >= 0; --k) {
    if (!w.Contains(order.at(k))) return order.at(k);
  }
  return std::nullopt;
}

std::optional<ActivePair> ScalingState::FindActivePair() const {
  for (int i = 0; i < comb_.size(); ++i) {
    if (auto v = ActiveVertex(comb_.entries[i].base.ordering, w_)) {
      return ActivePair{i, *v};
    }
  }
  return std::nullopt;
}

void ScalingState::Push(int i, int u, int v) {
  if (i < 0 || i >= comb_.size()) {
    throw InvalidArgumentError("push on a missing combination entry");
  }
  const int k = comb_.entries[i].base.ordering.position(u);
  if (k < 1 || comb_.entries[i].base.ordering.at(k - 1) != v) {
    throw InvalidArgumentError("push needs u immediately after v");
  }
  std::vector<Rational> z_before;
  if (options_.check_invariants || options_.record_trace) z_before = Z();
  Rational z_minus_before;
  if (options_.record_trace) z_minus_before = ZMinus();

  const Rational capacity =
      ExchangeCapacityConsecutive(f_, comb_.entries[i].base, k);
  if (sgn(capacity) < 0) {
    throw InternalInvariantError("negative exchange capacity");
  }
  Rational alpha = 0;
  bool saturating = true;
  if (sgn(capacity) > 0) {
    const Rational full = comb_.entries[i].lambda * capacity;
    alpha = full < delta_ ? full : delta_;
    phi_.Add(u, v, -alpha);
#ifdef SFM_SABOTAGE_PUSH
    // Deliberately broken build used to check that the invariant layer and
    // the acceptance suite notice a wrong flow update.
    phi_.Add(u, v, -alpha / 2);
#endif
    if (alpha < full) {
      saturating = false;
      CombinationEntry copy{comb_.entries[i].lambda - alpha / capacity,
                            comb_.entries[i].base};
      comb_.entries[i].lambda = alpha / capacity;
      comb_.entries.push_back(std::move(copy));
    }
    comb_.x[u] += alpha;
    comb_.x[v] -= alpha;
  }
  comb_.entries[i].base =
      ApplyInterchange(std::move(comb_.entries[i].base), k, capacity);

  ++stats_.pushes;
  ++(saturating ? stats_.saturating_pushes : stats_.nonsaturating_pushes);
  stats_.max_combination_size =
      std::max<int64_t>(stats_.max_combination_size, comb_.size());
  w_ = ResidualReachable(phi_, s_);

  std::vector<Rational> z_after;
  if (options_.check_invariants || options_.record_trace) z_after = Z();
  const bool z_unchanged = z_after == z_before;
  if (options_.check_invariants) {
    if (!z_unchanged) {
      throw InternalInvariantError("z = x - boundary(phi) changed in a push");
    }
    if (comb_.size() > 2 * n_) {
      throw InternalInvariantError("convex combination exceeds 2n entries");
    }
  }
  if (options_.record_trace) {
    TraceEvent e;
    e.kind = TraceKind::kPush;
    e.phase = stats_.phases;
    e.delta = delta_;
    e.index = i;
    e.u = u;
    e.v = v;
    e.capacity = capacity;
    e.alpha = alpha;
    e.saturating = saturating;
    e.z_unchanged = z_unchanged;
    e.z_minus_before = std::move(z_minus_before);
    e.z_minus_after = ZMinus();
    e.z_before = std::move(z_before);
    e.z_after = std::move(z_after);
    trace_.push_back(std::move(e));
  }
}

void ScalingState::Augment() {
  auto path = FindAugmentingPath(phi_, s_, t_);
  if (!path) throw InternalInvariantError("W meets T but no path found");
  Rational z_minus_before;
  std::vector<Rational> z_before;
  if (options_.record_trace) {
    z_minus_before = ZMinus();
    z_before = Z();
  }
  sfm::Augment(phi_, *path, delta_);
  ++stats_.augmentations;
  ++phase_augmentations_;
  stats_.max_phase_augmentations =
      std::max(stats_.max_phase_augmentations, phase_augmentations_);
  if (options_.check_invariants &&
      phase_augmentations_ > static_cast<int64_t>(n_) * n_ + n_) {
    throw InternalInvariantError("more than n^2 + n augmentations in a phase");
  }
  Refresh();
  if (options_.record_trace) {
    TraceEvent e;
    e.kind = TraceKind::kAugment;
    e.phase = stats_.phases;
    e.delta = delta_;
    e.path = std::move(*path);
    e.z_minus_before = std::move(z_minus_before);
    e.z_minus_after = ZMinus();
    e.z_before = std::move(z_before);
    e.z_after = Z();
    trace_.push_back(std::move(e));
  }
}

void ScalingState::Reduce() {
  comb_ = ReduceCombination(std::move(comb_));
  ++stats_.reductions;
  if (options_.check_invariants) {
    comb_.CheckInvariants();
    if (comb_.size() > n_ + 1) {
      throw InternalInvariantError("reduced combination exceeds n+1 entries");
    }
  }
}

PhaseExit ScalingState::RunPhase() {
  // The loop also continues when W already meets T without an active pair:
  // an augmenting path exists and must be used before W can be reported.
  while (!s_.Empty() && !t_.Empty() &&
         (w_.Intersects(t_) || FindActivePair().has_value())) {
    while (!w_.Intersects(t_)) {
      const auto pair = FindActivePair();
      if (!pair) break;
      const LinearOrdering& order =
          comb_.entries[pair->index].base.ordering;
      const int u = order.at(order.position(pair->vertex) + 1);
      Push(pair->index, u, pair->vertex);
    }
    if (w_.Intersects(t_)) Augment();
    Reduce();
  }
  PhaseExit exit = PhaseExit::kNoActivePair;
  if (s_.Empty()) {
    exit = PhaseExit::kNoSources;
  } else if (t_.Empty()) {
    exit = PhaseExit::kNoSinks;
  }
  Rational x_of_w = 0;
  if (exit == PhaseExit::kNoActivePair) {
    for (int v : w_.Indices()) x_of_w += comb_.x[v];
    if (options_.check_invariants) CheckTightReachable();
  }
  if (options_.record_trace) {
    TraceEvent e;
    e.kind = TraceKind::kPhaseEnd;
    e.phase = stats_.phases;
    e.delta = delta_;
    e.exit = exit;
    e.augmentations = phase_augmentations_;
    e.z_minus_after = ZMinus();
    e.reachable = w_;
    e.x_of_reachable = x_of_w;
    trace_.push_back(std::move(e));
  }
  return exit;
}

void ScalingState::CheckTightReachable() const {
  const int size = w_.Count();
  if (size == 0) return;
  Rational x_of_w = 0;
  for (int v : w_.Indices()) x_of_w += comb_.x[v];
  for (const auto& e : comb_.entries) {
    for (int k = 0; k < size; ++k) {
      if (!w_.Contains(e.base.ordering.at(k))) {
        throw InternalInvariantError("W is not a prefix of every ordering");
      }
    }
    if (e.base.prefix_values[size - 1] != x_of_w) {
      throw InternalInvariantError("W is not tight for x");
    }
  }
}

Subset ScalingState::OutputSet() const {
  if (s_.Empty()) return Subset(n_);
  if (t_.Empty()) return Subset::Full(n_);
  if (options_.check_invariants) CheckTightReachable();
  return w_;
}

void AccumulateStats(SolveStats& into, const SolveStats& from) {
  into.oracle_calls += from.oracle_calls;
  into.phases += from.phases;
  into.augmentations += from.augmentations;
  into.pushes += from.pushes;
  into.saturating_pushes += from.saturating_pushes;
  into.nonsaturating_pushes += from.nonsaturating_pushes;
  into.reductions += from.reductions;
  into.max_phase_augmentations =
      std::max(into.max_phase_augmentations, from.max_phase_augmentations);
  into.max_combination_size =
      std::max(into.max_combination_size, from.max_combination_size);
  into.fix_calls += from.fix_calls;
  into.arcs_added += from.arcs_added;
  into.contractions += from.contractions;
  into.deletions += from.deletions;
}

namespace {

Certificate BuildCertificate(const Subset& minimizer,
                             const ConvexCombination& comb, const Flow& phi,
                             const Rational& scale, const Rational& gap) {
  Certificate c;
  c.minimizer = minimizer;
  for (const auto& e : comb.entries) {
    c.lambda.push_back(e.lambda);
    CertificateBase b;
    b.ordering = e.base.ordering.perm();
    for (const Rational& value : e.base.y) b.y.push_back(value * scale);
    c.bases.push_back(std::move(b));
  }
  c.phi = phi.ToMatrix();
  for (auto& row : c.phi) {
    for (auto& value : row) value *= scale;
  }
  c.gap = gap;
  return c;
}

}  // namespace

SfmResult Sfm(const SetFunctionOracle& f, const SolverOptions& options) {
  const int n = f.size();
  if (n == 0) throw InvalidArgumentError("empty ground set");
  const Rational epsilon = options.epsilon.value_or(Rational(1));
  if (sgn(epsilon) <= 0) throw InvalidArgumentError("epsilon must be positive");
  const int64_t calls_before = f.calls();
  const SetFunctionOracle g = epsilon == 1 ? f : Scale(f, 1 / epsilon);

  const LinearOrdering identity = LinearOrdering::Identity(n);
  const Rational m = UpperBoundM(g, identity);
  ExtremeBase initial = GreedyExtremeBase(g, identity);

  SfmResult result;
  result.stats.bound_m = m;
  if (sgn(m) == 0) {
    // |f| <= M = 0, so f vanishes everywhere.
    ConvexCombination comb(std::move(initial));
    result.minimizer = Subset(n);
    result.value = f.offset();
    result.gap = 0;
    result.certificate = BuildCertificate(result.minimizer, comb, Flow(n),
                                          epsilon, result.gap);
    result.stats.oracle_calls = f.calls() - calls_before;
    return result;
  }
  if (m < 1) {
    throw PreconditionError(
        "epsilon is larger than the spread of the function values");
  }

  ScalingState state(g, std::move(initial), m, options);
  const Rational threshold = Rational(1, n * n);
  while (state.delta() >= threshold) {
    state.BeginPhase();
    state.RunPhase();
  }
  result.minimizer = state.OutputSet();

  Rational x_minus = 0;
  for (const Rational& value : state.combination().x) {
    x_minus += NegativePart(value);
  }
  const Rational scaled_value = g.Evaluate(result.minimizer);
  const Rational scaled_gap = scaled_value - x_minus;
  if (options.check_invariants && scaled_gap >= 1) {
    throw InternalInvariantError("final duality gap is not below one");
  }
  result.gap = scaled_gap * epsilon;
  result.value = scaled_value * epsilon + f.offset();
  result.certificate =
      BuildCertificate(result.minimizer, state.combination(), state.flow(),
                       epsilon, result.gap);
  SolveStats stats = state.stats();
  stats.bound_m = m;
  stats.oracle_calls = f.calls() - calls_before;
  result.stats = stats;
  result.trace = state.TakeTrace();
  return result;
}

}  // namespace sfm
