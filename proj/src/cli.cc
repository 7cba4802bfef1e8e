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

#include "sfm/cli.h"

#include <fstream>
#include <iostream>

#include "sfm/acceptance.h"
#include "sfm/errors.h"
#include "sfm/families.h"
#include "sfm/generators.h"
#include "sfm/instance_io.h"
#include "sfm/scaling.h"
#include "sfm/strong.h"
#include "sfm/verify.h"

namespace sfm {
namespace {

bool WriteText(const std::string& path, const std::string& text,
               std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

SfmResult BruteForceResultOf(const SetFunctionOracle& f) {
  const int64_t calls = f.calls();
  BruteForceResult brute = BruteForceMin(f);
  SfmResult result;
  result.minimizer = brute.minimizer;
  result.value = brute.value + f.offset();
  result.stats.oracle_calls = f.calls() - calls;
  return result;
}

// Empty when the result checks out, otherwise the reason.
std::string Verify(const SetFunctionOracle& f, const RunConfig& cfg,
                   const SfmResult& result, const Json& emitted) {
  if (f.Evaluate(result.minimizer) + f.offset() != result.value) {
    return "reported value differs from f(minimizer)";
  }
  if (cfg.algorithm != Algorithm::kBrute) {
    const Json& certificate = emitted.at("certificate");
    if (certificate.is_null()) return "no certificate emitted";
    const Certificate parsed = CertificateFromJson(certificate, f.ground());
    const CertificateReport report =
        CheckCertificate(f, parsed, cfg.epsilon.value_or(Rational(1)));
    if (!report.ok) {
      return "certificate clause '" + report.failed_clause +
             "' failed: " + report.detail;
    }
  }
  if (f.size() <= kBruteForceMaxSize) {
    const BruteForceResult brute = BruteForceMin(f);
    if (brute.value + f.offset() != result.value) {
      return "brute force minimum is " + FormatRational(brute.value + f.offset()) +
             ", solver reported " + FormatRational(result.value);
    }
  }
  return {};
}

}  // namespace

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  if (name == "scaling") return Algorithm::kScaling;
  if (name == "strong") return Algorithm::kStrong;
  if (name == "brute") return Algorithm::kBrute;
  return std::nullopt;
}

int SolveCommand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.epsilon && sgn(*cfg.epsilon) <= 0) {
    err << "error: --epsilon must be positive\n";
    return kExitInputError;
  }
  std::optional<SetFunctionOracle> oracle;
  try {
    const Instance instance = ReadInstanceFile(cfg.input);
    oracle.emplace(MakeOracle(instance));
  } catch (const Error& e) {
    err << "error: " << cfg.input << ": " << e.what() << '\n';
    return kExitInputError;
  }
  const SetFunctionOracle& f = *oracle;
  if (cfg.algorithm == Algorithm::kBrute && f.size() > kBruteForceMaxSize) {
    err << "error: brute force is limited to 24 elements\n";
    return kExitInputError;
  }
  if (cfg.algorithm != Algorithm::kBrute && !cfg.epsilon &&
      !f.integer_valued()) {
    err << "error: the instance is not integer-valued; pass --epsilon with "
           "a lower bound on the gap between distinct values\n";
    return kExitInputError;
  }

  SolverOptions options;
  options.epsilon = cfg.epsilon;
  options.record_trace = !cfg.trace_path.empty();
  SfmResult result;
  try {
    switch (cfg.algorithm) {
      case Algorithm::kScaling:
        result = Sfm(f, options);
        break;
      case Algorithm::kStrong:
        result = StrongSfm(f, options);
        break;
      case Algorithm::kBrute:
        result = BruteForceResultOf(f);
        break;
    }
  } catch (const InternalInvariantError& e) {
    err << "error: solver invariant violated: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  const Json emitted =
      ResultToJson(result, f.ground(), cfg.algorithm != Algorithm::kBrute);
  if (!WriteText(cfg.output, emitted.dump(2) + "\n", out, err)) {
    return kExitInputError;
  }
  if (!cfg.trace_path.empty() &&
      !WriteText(cfg.trace_path, TraceToJsonLines(result.trace, f.ground()),
                 out, err)) {
    return kExitInputError;
  }
  if (cfg.verify) {
    const std::string failure = Verify(f, cfg, result, emitted);
    if (!failure.empty()) {
      err << "verification failed: " << failure << '\n';
      return kExitVerificationFailure;
    }
  }
  return kExitOk;
}

int GenCommand(const std::string& family, int n, uint64_t seed,
               const std::string& output, std::ostream& out,
               std::ostream& err) {
  std::string text;
  try {
    text = InstanceToText(GenerateInstance(family, n, seed));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return WriteText(output, text, out, err) ? kExitOk : kExitInputError;
}

int SelftestCommand(std::ostream& out) {
  const AcceptanceReport report = RunAcceptanceSuite(&out);
  out << (report.AllPassed() ? "selftest: all criteria passed"
                             : "selftest: FAILED")
      << '\n';
  return report.AllPassed() ? kExitOk : kExitVerificationFailure;
}

}  // namespace sfm
