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

#include "sfm/strong.h"

#include <optional>
#include <string>

#include "sfm/errors.h"

namespace sfm {

PrecedenceDag::PrecedenceDag(int original_size)
    : original_size_(original_size),
      arcs_(original_size, std::vector<bool>(original_size, false)) {
  for (int v = 0; v < original_size; ++v) {
    Subset s(original_size);
    s.Insert(v);
    represents_.push_back(std::move(s));
  }
}

void PrecedenceDag::AddArc(int u, int w) {
  if (u == w || u < 0 || w < 0 || u >= size() || w >= size()) {
    throw InvalidArgumentError("bad dag arc");
  }
  arcs_[u][w] = true;
}

Subset PrecedenceDag::Reachable(int v) const {
  Subset seen(size());
  std::vector<int> stack = {v};
  seen.Insert(v);
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < size(); ++b) {
      if (arcs_[a][b] && !seen.Contains(b)) {
        seen.Insert(b);
        stack.push_back(b);
      }
    }
  }
  return seen;
}

bool PrecedenceDag::IsAcyclic() const {
  for (int v = 0; v < size(); ++v) {
    for (int b = 0; b < size(); ++b) {
      if (arcs_[v][b] && Reachable(b).Contains(v)) return false;
    }
  }
  return true;
}

std::vector<int> PrecedenceDag::ConsistentOrder(const Subset& among) const {
  std::vector<int> order;
  Subset placed(size());
  const int target = among.Count();
  while (static_cast<int>(order.size()) < target) {
    int pick = -1;
    for (int v : among.Indices()) {
      if (placed.Contains(v)) continue;
      bool ready = true;
      for (int b : among.Indices()) {
        if (arcs_[v][b] && !placed.Contains(b)) {
          ready = false;
          break;
        }
      }
      if (ready) {
        pick = v;
        break;
      }
    }
    if (pick == -1) {
      throw InternalInvariantError("precedence graph has a cycle");
    }
    placed.Insert(pick);
    order.push_back(pick);
  }
  return order;
}

std::vector<int> PrecedenceDag::ConsistentOrder() const {
  return ConsistentOrder(Subset::Full(size()));
}

void PrecedenceDag::Contract(const Subset& component) {
  const std::vector<int> members = component.Indices();
  if (members.empty()) {
    throw InvalidArgumentError("cannot contract an empty set");
  }
  // Strong connectivity inside the induced subgraph: the first member must
  // reach, and be reached by, every member.
  auto reach_within = [&](bool forward) {
    Subset seen(size());
    std::vector<int> stack = {members[0]};
    seen.Insert(members[0]);
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b : members) {
        const bool arc = forward ? arcs_[a][b] : arcs_[b][a];
        if (arc && !seen.Contains(b)) {
          seen.Insert(b);
          stack.push_back(b);
        }
      }
    }
    return seen;
  };
  if (reach_within(true) != component || reach_within(false) != component) {
    throw InvalidArgumentError("contracted set is not strongly connected");
  }

  const int keep = members[0];
  std::vector<int> new_index(size(), -1);
  int next = 0;
  for (int v = 0; v < size(); ++v) {
    if (component.Contains(v) && v != keep) continue;
    new_index[v] = next++;
  }
  for (int v : members) new_index[v] = new_index[keep];

  std::vector<Subset> represents(next, Subset(original_size_));
  std::vector<std::vector<bool>> arcs(next, std::vector<bool>(next, false));
  for (int v = 0; v < size(); ++v) represents[new_index[v]] |= represents_[v];
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (arcs_[a][b] && new_index[a] != new_index[b]) {
        arcs[new_index[a]][new_index[b]] = true;
      }
    }
  }
  represents_ = std::move(represents);
  arcs_ = std::move(arcs);
}

void PrecedenceDag::Remove(const Subset& vertices) {
  std::vector<int> kept;
  for (int v = 0; v < size(); ++v) {
    if (!vertices.Contains(v)) kept.push_back(v);
  }
  std::vector<Subset> represents;
  std::vector<std::vector<bool>> arcs(kept.size(),
                                      std::vector<bool>(kept.size(), false));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    represents.push_back(represents_[kept[i]]);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      arcs[i][j] = arcs_[kept[i]][kept[j]];
    }
  }
  represents_ = std::move(represents);
  arcs_ = std::move(arcs);
}

Subset PrecedenceDag::Expand(const Subset& vertices) const {
  Subset out(original_size_);
  for (int v : vertices.Indices()) out |= represents_[v];
  return out;
}

EtaResult Eta(const SetFunctionOracle& f, const PrecedenceDag& dag) {
  if (f.size() != dag.size()) {
    throw InvalidArgumentError("function and dag disagree on the vertex set");
  }
  if (dag.size() == 0) {
    throw InvalidArgumentError("eta is undefined on an empty vertex set");
  }
  EtaResult r;
  for (int v = 0; v < dag.size(); ++v) {
    Subset reach = dag.Reachable(v);
    Rational with_v = f.Evaluate(reach);
    reach.Erase(v);
    Rational marginal = with_v - f.Evaluate(reach);
    if (r.argmax == -1 || marginal > r.eta) {
      r.eta = marginal;
      r.argmax = v;
    }
    r.marginals.push_back(std::move(marginal));
  }
  return r;
}

ExtremeBase ConsistentExtremeBase(const SetFunctionOracle& f,
                                  const PrecedenceDag& dag, bool check) {
  if (f.size() != dag.size()) {
    throw InvalidArgumentError("function and dag disagree on the vertex set");
  }
  ExtremeBase base =
      GreedyExtremeBase(f, LinearOrdering(dag.ConsistentOrder()));
  if (check) {
    const EtaResult eta = Eta(f, dag);
    for (int v = 0; v < dag.size(); ++v) {
      if (base.y[v] > eta.marginals[v]) {
        throw InternalInvariantError(
            "consistent base exceeds f(R(v)) - f(R(v) - v)");
      }
    }
  }
  return base;
}

int Fix(const SetFunctionOracle& f, const ExtremeBase& x0, const Rational& eta,
        const SolverOptions& options, SolveStats* stats) {
  const int n = f.size();
  if (n == 0) throw InvalidArgumentError("Fix on an empty ground set");
  if (sgn(eta) <= 0) throw PreconditionError("Fix needs eta > 0");
  for (const Rational& value : x0.y) {
    if (value > eta) throw PreconditionError("Fix needs x0 <= eta");
  }
  const Rational kappa = eta / 2;
  const Rational n_cubed = Rational(n) * n * n;
  const Rational target = kappa / n_cubed;

  ScalingState state(f, x0, eta, options);
  while (state.delta() >= target) {
    state.BeginPhase();
    state.RunPhase();
  }
  const std::vector<Rational>& x = state.combination().x;
  int w = 0;
  for (int v = 1; v < n; ++v) {
    if (x[v] < x[w]) w = v;
  }
  if (!(x[w] < -Rational(n) * n * state.delta())) {
    throw PreconditionError(
        "Fix found no element below -n^2 delta; no set reaches -eta/2");
  }
  if (stats != nullptr) AccumulateStats(*stats, state.stats());
  return w;
}

namespace {

GroundSet GroupLabels(const SetFunctionOracle& f, const PrecedenceDag& dag) {
  std::vector<std::string> labels;
  for (int v = 0; v < dag.size(); ++v) {
    std::string label;
    for (int e : dag.represents(v).Indices()) {
      if (!label.empty()) label += "+";
      label += f.ground().label(e);
    }
    labels.push_back(std::move(label));
  }
  return GroundSet(std::move(labels));
}

}  // namespace

SfmResult StrongSfm(const SetFunctionOracle& f, const SolverOptions& options,
                    StrongLog* log, bool certify) {
  const int n = f.size();
  if (n == 0) throw InvalidArgumentError("empty ground set");
  const int64_t calls_before = f.calls();

  PrecedenceDag dag(n);
  Subset fixed(n);
  std::optional<Rational> top;
  SolveStats stats;
  SfmResult result;

  // Current function: h(X) = g(fixed + expand(X)) - g(fixed), where g is f
  // with the value of the full original set possibly lowered by clamping.
  auto current = [&]() {
    const SetFunctionOracle g = top ? OverrideTop(f, *top) : f;
    return GroupView(g, fixed, dag.groups(), GroupLabels(f, dag));
  };

  std::optional<SetFunctionOracle> h;
  while (dag.size() > 0) {
    h = current();
    const Subset all = Subset::Full(dag.size());
    if (sgn(h->Evaluate(all)) > 0) {
      // fixed is a proper subset of V here, so g(fixed) = f(fixed).
      top = f.Evaluate(fixed);
      h = current();
    }
    const EtaResult eta = Eta(*h, dag);
    if (sgn(eta.eta) <= 0) break;
    if (stats.fix_calls >= static_cast<int64_t>(n) * n) {
      throw InternalInvariantError("more than n^2 Fix calls");
    }
    const int u = eta.argmax;
    const Subset reach_u = dag.Reachable(u);
    std::vector<Subset> reach;
    if (log != nullptr) {
      for (int v = 0; v < dag.size(); ++v) reach.push_back(dag.Reachable(v));
    }

    if (h->Evaluate(reach_u) >= eta.eta / 2) {
      const SetFunctionOracle restricted = RestrictAbove(*h, reach_u);
      const Subset among = reach_u.Complement();
      const std::vector<int> members = among.Indices();
      std::vector<int> local_of(dag.size(), -1);
      for (std::size_t j = 0; j < members.size(); ++j) local_of[members[j]] = j;
      std::vector<int> local_order;
      for (int v : dag.ConsistentOrder(among)) local_order.push_back(local_of[v]);
      const ExtremeBase x0 =
          GreedyExtremeBase(restricted, LinearOrdering(local_order));
      if (options.check_invariants) {
        for (std::size_t j = 0; j < members.size(); ++j) {
          if (x0.y[j] > eta.marginals[members[j]]) {
            throw InternalInvariantError(
                "consistent base exceeds f(R(v)) - f(R(v) - v)");
          }
        }
      }
      const int w_local = Fix(restricted, x0, eta.eta, options, &stats);
      const int w = members[w_local];
      ++stats.fix_calls;
      if (log != nullptr) {
        log->bases.push_back({*h, members, x0.y, reach});
        log->fixes.push_back({restricted, w_local});
        log->arcs.push_back({*h, u, w});
      }
      const Subset reach_w = dag.Reachable(w);
      dag.AddArc(u, w);
      ++stats.arcs_added;
      if (reach_w.Contains(u)) {
        Subset cycle(dag.size());
        for (int v : reach_w.Indices()) {
          if (dag.Reachable(v).Contains(u)) cycle.Insert(v);
        }
        dag.Contract(cycle);
        ++stats.contractions;
      }
    } else {
      const ExtremeBase x0 =
          ConsistentExtremeBase(*h, dag, /*check=*/false);
      if (options.check_invariants) {
        for (int v = 0; v < dag.size(); ++v) {
          if (x0.y[v] > eta.marginals[v]) {
            throw InternalInvariantError(
                "consistent base exceeds f(R(v)) - f(R(v) - v)");
          }
        }
      }
      const int w = Fix(*h, x0, eta.eta, options, &stats);
      ++stats.fix_calls;
      if (log != nullptr) {
        std::vector<int> identity(dag.size());
        for (int v = 0; v < dag.size(); ++v) identity[v] = v;
        log->bases.push_back({*h, identity, x0.y, reach});
        log->fixes.push_back({*h, w});
      }
      const Subset reach_w = dag.Reachable(w);
      fixed |= dag.Expand(reach_w);
      dag.Remove(reach_w);
      ++stats.deletions;
    }
    if (options.check_invariants && !dag.IsAcyclic()) {
      throw InternalInvariantError("precedence graph left cyclic");
    }
  }
  if (dag.size() > 0 && sgn(h->Evaluate(Subset::Full(dag.size()))) < 0) {
    fixed |= dag.Expand(Subset::Full(dag.size()));
  }

  result.minimizer = fixed;
  const Rational value = f.Evaluate(fixed);
  result.value = value + f.offset();
  stats.oracle_calls = f.calls() - calls_before;
  result.stats = stats;

  if (certify) {
    SolverOptions cert_options = options;
    cert_options.record_trace = false;
    SfmResult scaled = Sfm(f, cert_options);
    Certificate cert = std::move(*scaled.certificate);
    const int m = static_cast<int>(cert.lambda.size());
    Rational x_minus = 0;
    for (int v = 0; v < n; ++v) {
      Rational xv = 0;
      for (int i = 0; i < m; ++i) xv += cert.lambda[i] * cert.bases[i].y[v];
      x_minus += NegativePart(xv);
    }
    cert.minimizer = fixed;
    cert.gap = value - x_minus;
    result.gap = cert.gap;
    result.certificate = std::move(cert);
  }
  return result;
}

}  // namespace sfm
