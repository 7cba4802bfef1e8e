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

#ifndef SFM_INSTANCE_IO_H_
#define SFM_INSTANCE_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sfm/certificate.h"
#include "sfm/families.h"
#include "sfm/oracle.h"
#include "sfm/rational.h"
#include "sfm/scaling.h"

namespace sfm {

using Json = nlohmann::ordered_json;

// Reads an instance. JSON documents carry a "type" of "table", "coverage",
// "concave" or "matroid"; anything starting with the word "cut" is read as
// the text cut format:
//
//   cut <n> <m> <directed|undirected>
//   <u> <v> <capacity>        (m lines, vertices 0-indexed)
//   node <v> <weight>         (optional modular term)
//
// Blank lines and lines starting with '#' are skipped. Errors throw
// InputError naming the offending line or JSON field.
Instance ParseInstance(std::string_view text);
Instance ReadInstanceFile(const std::string& path);

// Inverse of ParseInstance; the output is deterministic.
std::string InstanceToText(const Instance& instance);

// Rationals are written as strings, "p/q" or "p".
Json RationalToJson(const Rational& value);
// Accepts a string "p/q" or an integer. `field` names the value in errors.
Rational RationalFromJson(const Json& value, const std::string& field);

Json SubsetToJson(const Subset& x, const GroundSet& ground);

Json CertificateToJson(const Certificate& certificate, const GroundSet& ground);
Certificate CertificateFromJson(const Json& json, const GroundSet& ground);

// {"minimizer", "value", "gap", "stats", "certificate"}; gap and
// certificate are null when the result has none.
Json ResultToJson(const SfmResult& result, const GroundSet& ground,
                  bool has_gap = true);

// One JSON object per line, "event" being "phase", "push" or "augment".
std::string TraceToJsonLines(const std::vector<TraceEvent>& trace,
                             const GroundSet& ground);

}  // namespace sfm

#endif  // SFM_INSTANCE_IO_H_
