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

#ifndef SFM_SUBSET_H_
#define SFM_SUBSET_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sfm {

// A subset of {0, ..., universe-1}, stored as a packed bit vector. For
// universes of at most 64 elements it converts to and from a plain bitmask;
// any universe converts to and from a sorted index list.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe);

  static Subset Full(int universe);
  static Subset FromMask(int universe, uint64_t mask);
  static Subset FromIndices(int universe, std::span<const int> indices);

  int universe() const { return universe_; }

  bool Contains(int element) const;
  void Insert(int element);
  void Erase(int element);

  int Count() const;
  bool Empty() const;
  bool IsSubsetOf(const Subset& other) const;
  bool Intersects(const Subset& other) const;

  // Sorted ascending.
  std::vector<int> Indices() const;
  // Requires universe() <= 64.
  uint64_t Mask() const;

  Subset Complement() const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset& a, const Subset& b) = default;
  // Orders subsets of one universe by their value as binary numbers, so the
  // smallest bitmask compares first.
  friend bool operator<(const Subset& a, const Subset& b);

  std::size_t Hash() const;
  std::string ToString() const;

 private:
  void CheckElement(int element) const;
  void CheckSameUniverse(const Subset& other) const;

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.Hash(); }
};

}  // namespace sfm

#endif  // SFM_SUBSET_H_
