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

#include "sfm/ordering.h"

#include "sfm/errors.h"

namespace sfm {

LinearOrdering::LinearOrdering(std::vector<int> perm) : perm_(std::move(perm)) {
  const int n = size();
  pos_.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    const int v = perm_[k];
    if (v < 0 || v >= n || pos_[v] != -1) {
      throw InvalidArgumentError("ordering is not a permutation");
    }
    pos_[v] = k;
  }
}

LinearOrdering LinearOrdering::Identity(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return LinearOrdering(std::move(perm));
}

void LinearOrdering::SwapAdjacent(int k) {
  if (k < 1 || k >= size()) {
    throw InvalidArgumentError("adjacent swap position out of range");
  }
  std::swap(perm_[k - 1], perm_[k]);
  pos_[perm_[k - 1]] = k - 1;
  pos_[perm_[k]] = k;
}

Subset LinearOrdering::Prefix(int k) const {
  Subset s(size());
  for (int i = 0; i <= k; ++i) s.Insert(perm_[i]);
  return s;
}

}  // namespace sfm
