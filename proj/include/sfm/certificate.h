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

#ifndef SFM_CERTIFICATE_H_
#define SFM_CERTIFICATE_H_

#include <vector>

#include "sfm/rational.h"
#include "sfm/subset.h"

namespace sfm {

struct CertificateBase {
  std::vector<int> ordering;
  std::vector<Rational> y;
};

// Self-contained optimality witness: x = sum lambda_i y_i lies in B(f)
// because each y_i is the greedy base of its ordering, and
// gap = f(minimizer) - x^-(V) bounds how far f(minimizer) can be above the
// minimum.
struct Certificate {
  Subset minimizer;
  std::vector<Rational> lambda;
  std::vector<CertificateBase> bases;
  std::vector<std::vector<Rational>> phi;
  Rational gap;
};

}  // namespace sfm

#endif  // SFM_CERTIFICATE_H_
