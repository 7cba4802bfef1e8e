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

#ifndef SFM_VERIFY_H_
#define SFM_VERIFY_H_

#include <string>
#include <vector>

#include "sfm/certificate.h"
#include "sfm/oracle.h"
#include "sfm/rational.h"
#include "sfm/subset.h"

// Independent checks. Nothing here depends on the solver; results are
// recomputed from the oracle alone.
namespace sfm {

inline constexpr int kBruteForceMaxSize = 24;

struct BruteForceResult {
  Subset minimizer;  // smallest bitmask among the minimizers
  Rational value;    // normalized, f(empty) = 0
  std::vector<Subset> all_minimizers;  // ascending by bitmask
};

// Enumerates all 2^n subsets. Throws InvalidArgumentError for n > 24.
BruteForceResult BruteForceMin(const SetFunctionOracle& f);

struct CertificateReport {
  bool ok = true;
  std::string failed_clause;  // empty when ok
  std::string detail;
};

// Clauses, checked in this order:
//   "shape"        sizes of lambda, bases, orderings, y, phi agree with n
//   "positivity"   every lambda_i > 0
//   "sum"          lambda sums to 1
//   "ordering"     every ordering is a permutation
//   "greedy"       every y_i is the greedy base of its ordering
//   "skew"         phi is skew-symmetric
//   "gap"          gap = f(X) - x^-(V) for x = sum lambda_i y_i
//   "bound"        gap < epsilon
CertificateReport CheckCertificate(const SetFunctionOracle& f,
                                   const Certificate& certificate,
                                   const Rational& epsilon = Rational(1));

// True when y(X) <= f(X) for all X and y(V) = f(V). Exhaustive.
bool InBasePolyhedron(const SetFunctionOracle& f, const std::vector<Rational>& y);

// min{f(X) - y(X) : u in X, v not in X}. Requires y in B(f) (checked),
// u != v and n <= 16; throws InvalidArgumentError otherwise.
Rational ExchangeCapacityBruteForce(const SetFunctionOracle& f,
                                    const std::vector<Rational>& y, int u,
                                    int v);

}  // namespace sfm

#endif  // SFM_VERIFY_H_
