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

#ifndef SFM_ACCEPTANCE_H_
#define SFM_ACCEPTANCE_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace sfm {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool AllPassed() const;
};

// "PASS  3  name: detail" or "FAIL  3  name: detail".
std::string FormatCriterion(const CriterionResult& result);

// Runs the ten acceptance criteria. Each line is written to `progress` (when
// given) as soon as its criterion finishes.
AcceptanceReport RunAcceptanceSuite(std::ostream* progress = nullptr);

}  // namespace sfm

#endif  // SFM_ACCEPTANCE_H_
