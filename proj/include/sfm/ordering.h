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

#ifndef SFM_ORDERING_H_
#define SFM_ORDERING_H_

#include <span>
#include <vector>

#include "sfm/subset.h"

namespace sfm {

// A linear ordering (v_0, ..., v_{n-1}) of the ground set together with its
// inverse, so both "who is at position k" and "where is v" are O(1).
class LinearOrdering {
 public:
  LinearOrdering() = default;
  // Throws InvalidArgumentError unless `perm` is a permutation of 0..n-1.
  explicit LinearOrdering(std::vector<int> perm);

  static LinearOrdering Identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  int at(int position) const { return perm_[position]; }
  int position(int element) const { return pos_[element]; }
  const std::vector<int>& perm() const { return perm_; }

  // Swaps the elements at positions k-1 and k.
  void SwapAdjacent(int k);

  // {v_0, ..., v_k}.
  Subset Prefix(int k) const;

  friend bool operator==(const LinearOrdering&,
                         const LinearOrdering&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> pos_;
};

}  // namespace sfm

#endif  // SFM_ORDERING_H_
