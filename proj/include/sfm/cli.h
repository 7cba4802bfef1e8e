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

#ifndef SFM_CLI_H_
#define SFM_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "sfm/rational.h"

namespace sfm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailure = 2;

enum class Algorithm { kScaling, kStrong, kBrute };

std::optional<Algorithm> ParseAlgorithm(std::string_view name);

struct RunConfig {
  std::string input;
  Algorithm algorithm = Algorithm::kScaling;
  bool verify = false;
  std::string trace_path;  // empty: no trace
  std::optional<Rational> epsilon;
  uint64_t seed = 0;
  std::string output;  // empty: write to `out`
};

// Solves the instance at cfg.input and writes the result JSON. Returns
// kExitInputError on unreadable or invalid input (diagnostic on `err`) and
// kExitVerificationFailure when --verify finds a bad certificate or a
// disagreement with brute force.
int SolveCommand(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Writes a generated instance to `output` (or `out` when empty).
int GenCommand(const std::string& family, int n, uint64_t seed,
               const std::string& output, std::ostream& out,
               std::ostream& err);

// Runs the acceptance suite, printing one line per criterion. Nonzero when
// any criterion fails.
int SelftestCommand(std::ostream& out);

}  // namespace sfm

#endif  // SFM_CLI_H_
