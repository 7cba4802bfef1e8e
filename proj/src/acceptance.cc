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

#include "sfm/acceptance.h"

#include <stdlib.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "sfm/base.h"
#include "sfm/cli.h"
#include "sfm/errors.h"
#include "sfm/families.h"
#include "sfm/generators.h"
#include "sfm/instance_io.h"
#include "sfm/scaling.h"
#include "sfm/strong.h"
#include "sfm/verify.h"

namespace sfm {
namespace {

// Every threshold of the suite. Comparisons of solver values are exact
// rational equalities; nothing is compared with a tolerance.
constexpr int kInstancesPerFamily = 100;
constexpr int kCorpusMaxN = 10;
constexpr double kCorpusSecondsLimit = 120.0;
constexpr int kMinMutations = 5;
constexpr int kExchangeTriples = 1000;
constexpr int kExchangeMaxN = 8;
constexpr int kFixQualifying = 200;
constexpr int kFixMaxN = 8;
constexpr int kFixSeedLimit = 5000;
constexpr int kEpsilonInstances = 60;
constexpr int kEpsilonMaxN = 8;
constexpr double kOracleFactor = 100.0;
constexpr int kDeterminismN = 6;
constexpr uint64_t kDeterminismSeed = 11;

constexpr uint64_t kCorpusSeedBase = 1;
constexpr uint64_t kExchangeSeedBase = 100000;
constexpr uint64_t kFixSeedBase = 200000;
constexpr uint64_t kEpsilonSeedBase = 300000;

int64_t AugmentationLimit(int n) { return int64_t{n} * n + n; }

// Collects failures of one criterion; keeps the first message.
class Check {
 public:
  void Expect(bool ok, const std::function<std::string()>& message) {
    ++checked_;
    if (!ok && failures_++ == 0) first_ = message();
  }
  void Fail(std::string message) {
    ++checked_;
    if (failures_++ == 0) first_ = std::move(message);
  }
  bool ok() const { return failures_ == 0; }
  int64_t checked() const { return checked_; }
  std::string Summary(const std::string& passed) const {
    if (ok()) return passed;
    return std::to_string(failures_) + " failure(s); first: " + first_;
  }

 private:
  int64_t checked_ = 0;
  int64_t failures_ = 0;
  std::string first_;
};

std::string Describe(const std::string& family, int n, uint64_t seed) {
  return family + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
}

Rational NegativeSum(const std::vector<Rational>& z) {
  Rational total = 0;
  for (const auto& v : z) total += NegativePart(v);
  return total;
}

bool Contains(const std::vector<Subset>& sets, const Subset& x) {
  for (const auto& s : sets) {
    if (s == x) return true;
  }
  return false;
}

// Observations shared by the criteria that inspect the corpus runs.
struct CorpusTally {
  int64_t instances = 0;
  int64_t solves = 0;
  double seconds = 0;
  Check optimality;
  Check certificates;
  int64_t certificates_checked = 0;
  Check z_invariance;
  int64_t pushes = 0;
  int64_t augmentations = 0;
  Check envelopes;
  Check tightness;
  int64_t tight_exits = 0;
  // A certificate of a multi-base run for the mutation battery.
  std::optional<std::pair<Instance, Certificate>> specimen;
};

void TallyTrace(const SetFunctionOracle& f, const std::string& where,
                const std::vector<TraceEvent>& trace, CorpusTally& tally) {
  const int n = f.size();
  for (const auto& e : trace) {
    switch (e.kind) {
      case TraceKind::kPush:
        ++tally.pushes;
        tally.z_invariance.Expect(
            static_cast<int>(e.z_before.size()) == n && e.z_before == e.z_after &&
                e.z_minus_before == e.z_minus_after,
            [&] {
              return where + ": z changed in push at phase " +
                     std::to_string(e.phase);
            });
        break;
      case TraceKind::kAugment:
        ++tally.augmentations;
        tally.z_invariance.Expect(
            NegativeSum(e.z_after) - NegativeSum(e.z_before) == e.delta &&
                e.z_minus_after - e.z_minus_before == e.delta,
            [&] {
              return where + ": augmentation did not raise z^-(V) by delta";
            });
        break;
      case TraceKind::kPhaseEnd:
        tally.envelopes.Expect(e.augmentations <= AugmentationLimit(n), [&] {
          return where + ": " + std::to_string(e.augmentations) +
                 " augmentations in one phase";
        });
        if (e.exit == PhaseExit::kNoActivePair) {
          ++tally.tight_exits;
          tally.tightness.Expect(f.Evaluate(e.reachable) == e.x_of_reachable,
                                 [&] {
                                   return where + ": x(W) != f(W) for W = " +
                                          e.reachable.ToString();
                                 });
        }
        break;
      case TraceKind::kPhaseBegin:
        break;
    }
  }
}

void CheckEnvelopes(const SetFunctionOracle& f, const std::string& where,
                    const SfmResult& scaling, const SfmResult& strong,
                    int64_t uncached_calls, CorpusTally& tally) {
  const int n = f.size();
  const Rational m = UpperBoundM(f, LinearOrdering::Identity(n));
  const int64_t phase_limit =
      sgn(m) > 0 ? CeilLog2(Rational(n * n) * m) + 1 : 0;
  tally.envelopes.Expect(scaling.stats.phases <= phase_limit, [&] {
    return where + ": " + std::to_string(scaling.stats.phases) +
           " phases, limit " + std::to_string(phase_limit);
  });
  for (const SfmResult* r : {&scaling, &strong}) {
    tally.envelopes.Expect(
        r->stats.max_phase_augmentations <= AugmentationLimit(n), [&] {
          return where + ": phase with " +
                 std::to_string(r->stats.max_phase_augmentations) +
                 " augmentations";
        });
  }
  tally.envelopes.Expect(strong.stats.fix_calls <= int64_t{n} * n, [&] {
    return where + ": " + std::to_string(strong.stats.fix_calls) +
           " Fix calls";
  });
  const double nm = static_cast<double>(n) * m.get_d();
  const double log_term = nm > 1 ? std::log2(nm) : 0.0;
  const double call_limit = kOracleFactor * std::pow(n, 5) * (log_term + 2);
  for (int64_t calls : {scaling.stats.oracle_calls, uncached_calls}) {
    tally.envelopes.Expect(static_cast<double>(calls) <= call_limit, [&] {
      return where + ": " + std::to_string(calls) + " oracle calls";
    });
  }
}

void CheckEmittedCertificate(const SetFunctionOracle& f,
                             const std::string& where, const SfmResult& r,
                             CorpusTally& tally) {
  ++tally.certificates_checked;
  if (!r.certificate) {
    tally.certificates.Fail(where + ": no certificate");
    return;
  }
  const CertificateReport direct = CheckCertificate(f, *r.certificate);
  tally.certificates.Expect(direct.ok, [&] {
    return where + ": clause " + direct.failed_clause + ": " + direct.detail;
  });
  tally.certificates.Expect(r.gap < 1, [&] {
    return where + ": gap " + FormatRational(r.gap);
  });
  const Certificate parsed = CertificateFromJson(
      CertificateToJson(*r.certificate, f.ground()), f.ground());
  tally.certificates.Expect(CheckCertificate(f, parsed).ok, [&] {
    return where + ": certificate fails after a JSON round trip";
  });
}

CorpusTally RunCorpus() {
  CorpusTally tally;
  const auto start = std::chrono::steady_clock::now();
  for (const std::string& family : GeneratorFamilies()) {
    for (int i = 0; i < kInstancesPerFamily; ++i) {
      const int n = 1 + i % kCorpusMaxN;
      const uint64_t seed = kCorpusSeedBase + i;
      const std::string where = Describe(family, n, seed);
      ++tally.instances;
      try {
        const Instance instance = GenerateInstance(family, n, seed);
        const SetFunctionOracle reference = MakeOracle(instance);
        const BruteForceResult brute = BruteForceMin(reference);
        const Rational optimum = brute.value + reference.offset();

        SolverOptions options;
        options.check_invariants = false;
        options.record_trace = true;
        const SetFunctionOracle f_scaling = MakeOracle(instance);
        SfmResult scaling = Sfm(f_scaling, options);
        TallyTrace(reference, where, scaling.trace, tally);
        const SetFunctionOracle f_strong = MakeOracle(instance);
        const SfmResult strong = StrongSfm(f_strong);
        const SetFunctionOracle f_uncached =
            MakeOracle(instance, OracleOptions{.cache = false});
        const SfmResult uncached = Sfm(f_uncached);
        tally.solves += 2;

        for (const auto& [name, r] :
             {std::pair<const char*, const SfmResult*>{"scaling", &scaling},
              {"strong", &strong}}) {
          tally.optimality.Expect(
              r->value == optimum && Contains(brute.all_minimizers, r->minimizer),
              [&] {
                return where + ": " + name + " returned " +
                       FormatRational(r->value) + ", brute force " +
                       FormatRational(optimum);
              });
          CheckEmittedCertificate(reference, where + " " + name, *r, tally);
        }
        CheckEnvelopes(reference, where, scaling, strong,
                       uncached.stats.oracle_calls, tally);
        if (!tally.specimen && n >= 3 && scaling.certificate &&
            scaling.certificate->bases.size() >= 2) {
          tally.specimen.emplace(instance, *scaling.certificate);
        }
      } catch (const std::exception& e) {
        tally.optimality.Fail(where + ": " + e.what());
      }
    }
  }
  tally.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return tally;
}

CriterionResult CriterionOptimality(const CorpusTally& tally) {
  CriterionResult r{1, "exact optimality vs brute force", false, ""};
  std::ostringstream detail;
  detail.precision(1);
  detail << std::fixed << tally.instances << " instances, " << tally.solves
         << " solves, " << tally.seconds << " s";
  const bool in_time = tally.seconds < kCorpusSecondsLimit;
  r.passed = tally.optimality.ok() && in_time &&
             tally.instances >= 5 * kInstancesPerFamily;
  r.detail = tally.optimality.Summary(detail.str());
  if (!in_time) r.detail += " (over the time limit)";
  return r;
}

struct Mutation {
  std::string name;
  std::string expected_clause;
  std::function<void(Certificate&)> apply;
};

CriterionResult CriterionCertificates(const CorpusTally& tally) {
  CriterionResult r{2, "certificate soundness", false, ""};
  Check mutations;
  int applied = 0;
  if (!tally.specimen) {
    mutations.Fail("no multi-base certificate in the corpus");
  } else {
    const auto& [instance, original] = *tally.specimen;
    const SetFunctionOracle f = MakeOracle(instance);
    const int n = f.size();
    const BruteForceResult brute = BruteForceMin(f);
    std::optional<Subset> worse;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n) && !worse; ++mask) {
      Subset x = Subset::FromMask(n, mask);
      if (f.Evaluate(x) > brute.value) worse = x;
    }
    std::vector<Mutation> battery = {
        {"negated lambda", "positivity",
         [](Certificate& c) { c.lambda[0] = -c.lambda[0]; }},
        {"lambda off by one", "sum",
         [](Certificate& c) { c.lambda[0] += 1; }},
        {"repeated element in an ordering", "ordering",
         [](Certificate& c) {
           c.bases[0].ordering[0] = c.bases[0].ordering[1];
         }},
        {"perturbed base", "greedy",
         [](Certificate& c) { c.bases[0].y[c.bases[0].ordering[0]] += 1; }},
        {"asymmetric flow", "skew", [](Certificate& c) { c.phi[0][1] += 1; }},
        {"wrong gap", "gap", [](Certificate& c) { c.gap += 1; }},
    };
    if (worse) {
      battery.push_back({"non-minimal set", "bound", [&](Certificate& c) {
                           c.gap += f.Evaluate(*worse) - f.Evaluate(c.minimizer);
                           c.minimizer = *worse;
                         }});
    }
    for (const auto& m : battery) {
      Certificate c = original;
      m.apply(c);
      ++applied;
      const CertificateReport report = CheckCertificate(f, c);
      mutations.Expect(!report.ok && report.failed_clause == m.expected_clause,
                       [&] {
                         return m.name + " gave '" +
                                (report.ok ? "pass" : report.failed_clause) +
                                "', expected '" + m.expected_clause + "'";
                       });
    }
    if (applied < kMinMutations) mutations.Fail("too few mutations applied");
  }
  r.passed = tally.certificates.ok() && mutations.ok() &&
             tally.certificates_checked > 0;
  r.detail = std::to_string(tally.certificates_checked) +
             " certificates valid with gap < 1, " + std::to_string(applied) +
             " mutations rejected";
  if (!tally.certificates.ok()) {
    r.detail = tally.certificates.Summary("");
  } else if (!mutations.ok()) {
    r.detail = "mutation battery: " + mutations.Summary("");
  }
  return r;
}

CriterionResult CriterionExchangeCapacity() {
  CriterionResult r{3, "consecutive exchange capacity vs brute force", false, ""};
  Check check;
  const auto& families = GeneratorFamilies();
  for (int i = 0; i < kExchangeTriples; ++i) {
    const std::string& family = families[i % families.size()];
    const int n = 2 + i % (kExchangeMaxN - 1);
    const uint64_t seed = kExchangeSeedBase + i;
    try {
      const SetFunctionOracle f = MakeOracle(GenerateInstance(family, n, seed));
      std::mt19937_64 rng(seed);
      std::vector<int> perm(n);
      for (int v = 0; v < n; ++v) perm[v] = v;
      for (int k = n - 1; k > 0; --k) {
        std::swap(perm[k], perm[rng() % static_cast<uint64_t>(k + 1)]);
      }
      const int k = 1 + static_cast<int>(rng() % static_cast<uint64_t>(n - 1));
      const ExtremeBase base = GreedyExtremeBase(f, LinearOrdering(perm));
      const Rational beta = ExchangeCapacityConsecutive(f, base, k);
      const Rational brute = ExchangeCapacityBruteForce(
          f, base.y, base.ordering.at(k), base.ordering.at(k - 1));
      check.Expect(beta == brute, [&] {
        return Describe(family, n, seed) + " k=" + std::to_string(k) +
               ": one-call value " + FormatRational(beta) + ", brute force " +
               FormatRational(brute);
      });
    } catch (const std::exception& e) {
      check.Fail(Describe(family, n, seed) + ": " + e.what());
    }
  }
  r.passed = check.ok() && check.checked() >= kExchangeTriples;
  r.detail = check.Summary(std::to_string(check.checked()) +
                           " (instance, ordering, position) triples agree");
  return r;
}

CriterionResult CriterionZInvariance(const CorpusTally& tally) {
  CriterionResult r{4, "z-invariance", false, ""};
  r.passed = tally.z_invariance.ok() && tally.pushes > 0 &&
             tally.augmentations > 0;
  r.detail = tally.z_invariance.Summary(
      std::to_string(tally.pushes) + " pushes left z unchanged, " +
      std::to_string(tally.augmentations) +
      " augmentations raised z^-(V) by delta");
  return r;
}

CriterionResult CriterionEnvelopes(const CorpusTally& tally) {
  CriterionResult r{5, "complexity envelopes", false, ""};
  r.passed = tally.envelopes.ok();
  r.detail = tally.envelopes.Summary(
      std::to_string(tally.envelopes.checked()) +
      " bounds hold (augmentations per phase, phases, Fix calls, oracle "
      "calls with and without cache)");
  return r;
}

CriterionResult CriterionTightness(const CorpusTally& tally) {
  CriterionResult r{6, "W tight at phase exits without an active pair", false, ""};
  r.passed = tally.tightness.ok() && tally.tight_exits > 0;
  r.detail = tally.tightness.Summary(std::to_string(tally.tight_exits) +
                                     " exits with x(W) = f(W)");
  return r;
}

std::pair<CriterionResult, CriterionResult> CriteriaStrong() {
  CriterionResult fix{7, "Fix and arcs agree with all minimizers", false, ""};
  CriterionResult bound{8, "consistent base bound", false, ""};
  Check fix_check;
  Check bound_check;
  int qualifying = 0;
  int64_t fixes = 0;
  int64_t arcs = 0;
  int64_t bases = 0;
  const auto& families = GeneratorFamilies();
  for (int s = 0; s < kFixSeedLimit && qualifying < kFixQualifying; ++s) {
    const std::string& family = families[s % families.size()];
    const int n = 2 + s % (kFixMaxN - 1);
    const uint64_t seed = kFixSeedBase + s;
    const std::string where = Describe(family, n, seed);
    try {
      const SetFunctionOracle f = MakeOracle(GenerateInstance(family, n, seed));
      StrongLog log;
      const SfmResult result = StrongSfm(f, {}, &log, false);
      const BruteForceResult brute = BruteForceMin(f);
      fix_check.Expect(result.value == brute.value + f.offset(), [&] {
        return where + ": strong value differs from brute force";
      });
      if (!log.fixes.empty()) ++qualifying;
      for (const auto& record : log.fixes) {
        ++fixes;
        const BruteForceResult local = BruteForceMin(record.function);
        for (const auto& x : local.all_minimizers) {
          fix_check.Expect(x.Contains(record.returned), [&] {
            return where + ": Fix returned " + std::to_string(record.returned) +
                   ", missing from minimizer " + x.ToString();
          });
        }
      }
      for (const auto& record : log.arcs) {
        ++arcs;
        const BruteForceResult local = BruteForceMin(record.function);
        for (const auto& x : local.all_minimizers) {
          fix_check.Expect(!x.Contains(record.from) || x.Contains(record.to),
                           [&] {
                             return where + ": arc " +
                                    std::to_string(record.from) + "->" +
                                    std::to_string(record.to) +
                                    " violated by " + x.ToString();
                           });
        }
      }
      for (const auto& record : log.bases) {
        ++bases;
        const SetFunctionOracle& g = record.function;
        for (std::size_t j = 0; j < record.vertices.size(); ++j) {
          const int v = record.vertices[j];
          const Subset& reach = record.reach[v];
          Subset below = reach;
          below.Erase(v);
          const Rational limit = g.Evaluate(reach) - g.Evaluate(below);
          bound_check.Expect(record.y[j] <= limit, [&] {
            return where + ": x(" + std::to_string(v) + ") = " +
                   FormatRational(record.y[j]) + " exceeds " +
                   FormatRational(limit);
          });
        }
      }
    } catch (const std::exception& e) {
      fix_check.Fail(where + ": " + e.what());
    }
  }
  fix.passed = fix_check.ok() && qualifying >= kFixQualifying;
  fix.detail = fix_check.Summary(
      std::to_string(qualifying) + " qualifying instances, " +
      std::to_string(fixes) + " Fix results and " + std::to_string(arcs) +
      " arcs in every minimizer");
  bound.passed = bound_check.ok() && bases > 0;
  bound.detail = bound_check.Summary(std::to_string(bases) +
                                     " consistent bases within the bound");
  return {fix, bound};
}

CriterionResult CriterionEpsilon() {
  CriterionResult r{9, "epsilon-scaled rational instances", false, ""};
  Check check;
  const auto& families = GeneratorFamilies();
  for (int i = 0; i < kEpsilonInstances; ++i) {
    const std::string& family = families[i % families.size()];
    const int n = 1 + i % kEpsilonMaxN;
    const uint64_t seed = kEpsilonSeedBase + i;
    const std::string where = Describe(family, n, seed);
    try {
      const ScaledInstance scaled = GenerateRationalInstance(family, n, seed);
      const SetFunctionOracle f = MakeOracle(scaled.instance);
      SolverOptions options;
      options.epsilon = scaled.epsilon;
      const SfmResult result = Sfm(f, options);
      const BruteForceResult brute = BruteForceMin(f);
      check.Expect(result.value == brute.value + f.offset() &&
                       Contains(brute.all_minimizers, result.minimizer),
                   [&] {
                     return where + ": returned " + result.minimizer.ToString() +
                            " with value " + FormatRational(result.value);
                   });
      const CertificateReport report =
          result.certificate ? CheckCertificate(f, *result.certificate,
                                                scaled.epsilon)
                             : CertificateReport{false, "missing", ""};
      check.Expect(report.ok, [&] {
        return where + ": certificate clause " + report.failed_clause;
      });
    } catch (const std::exception& e) {
      check.Fail(where + ": " + e.what());
    }
  }
  r.passed = check.ok();
  r.detail = check.Summary(std::to_string(kEpsilonInstances) +
                           " instances solved exactly with certificates");
  return r;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CriterionResult CriterionDeterminism() {
  CriterionResult r{10, "determinism", false, ""};
  Check check;
  std::string pattern =
      (std::filesystem::temp_directory_path() / "sfm-selftest-XXXXXX").string();
  if (mkdtemp(pattern.data()) == nullptr) {
    r.detail = "cannot create a temporary directory";
    return r;
  }
  const std::filesystem::path dir(pattern);
  int configs = 0;
  std::ostringstream sink;
  for (const std::string& family : GeneratorFamilies()) {
    const auto first = dir / (family + "-1.txt");
    const auto second = dir / (family + "-2.txt");
    const int gen1 = GenCommand(family, kDeterminismN, kDeterminismSeed,
                                first.string(), sink, sink);
    const int gen2 = GenCommand(family, kDeterminismN, kDeterminismSeed,
                                second.string(), sink, sink);
    ++configs;
    check.Expect(gen1 == kExitOk && gen2 == kExitOk &&
                     ReadFile(first) == ReadFile(second),
                 [&] { return "gen " + family + " differs between runs"; });
    for (const char* name : {"scaling", "strong", "brute"}) {
      std::string outputs[2];
      std::string traces[2];
      int codes[2];
      for (int run = 0; run < 2; ++run) {
        RunConfig cfg;
        cfg.input = first.string();
        cfg.algorithm = *ParseAlgorithm(name);
        cfg.verify = true;
        const auto out = dir / (family + "-" + name + std::to_string(run));
        cfg.output = out.string() + ".json";
        cfg.trace_path = out.string() + ".trace";
        codes[run] = SolveCommand(cfg, sink, sink);
        outputs[run] = ReadFile(cfg.output);
        traces[run] = ReadFile(cfg.trace_path);
      }
      ++configs;
      check.Expect(codes[0] == kExitOk && codes[1] == kExitOk &&
                       outputs[0] == outputs[1] && traces[0] == traces[1] &&
                       !outputs[0].empty(),
                   [&] {
                     return "solve " + family + " --algorithm " + name +
                            " exit " + std::to_string(codes[0]) + "/" +
                            std::to_string(codes[1]) + " or output differs";
                   });
    }
  }
  std::error_code ignored;
  std::filesystem::remove_all(dir, ignored);
  r.passed = check.ok();
  r.detail = check.Summary(std::to_string(configs) +
                           " configurations byte-identical across two runs");
  return r;
}

}  // namespace

bool AcceptanceReport::AllPassed() const {
  for (const auto& c : criteria) {
    if (!c.passed) return false;
  }
  return !criteria.empty();
}

std::string FormatCriterion(const CriterionResult& result) {
  return std::string(result.passed ? "PASS" : "FAIL") + "  " +
         (result.id < 10 ? " " : "") + std::to_string(result.id) + "  " +
         result.name + ": " + result.detail;
}

AcceptanceReport RunAcceptanceSuite(std::ostream* progress) {
  AcceptanceReport report;
  auto record = [&](CriterionResult result) {
    if (progress) *progress << FormatCriterion(result) << std::endl;
    report.criteria.push_back(std::move(result));
  };
  const CorpusTally corpus = RunCorpus();
  record(CriterionOptimality(corpus));
  record(CriterionCertificates(corpus));
  record(CriterionExchangeCapacity());
  record(CriterionZInvariance(corpus));
  record(CriterionEnvelopes(corpus));
  record(CriterionTightness(corpus));
  auto [fix, bound] = CriteriaStrong();
  record(std::move(fix));
  record(std::move(bound));
  record(CriterionEpsilon());
  record(CriterionDeterminism());
  return report;
}

}  // namespace sfm
