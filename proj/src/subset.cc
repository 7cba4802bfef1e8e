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

#include "sfm/subset.h"

#include <bit>
#include <functional>

#include "sfm/errors.h"

namespace sfm {
namespace {

constexpr int kWordBits = 64;

int WordCount(int universe) { return (universe + kWordBits - 1) / kWordBits; }

}  // namespace

Subset::Subset(int universe) : universe_(universe) {
  if (universe < 0) throw InvalidSubsetError("negative universe size");
  words_.assign(WordCount(universe), 0);
}

Subset Subset::Full(int universe) {
  Subset s(universe);
  for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) {
    s.words_[w] = ~uint64_t{0};
  }
  const int tail = universe % kWordBits;
  if (tail != 0) s.words_.back() = (uint64_t{1} << tail) - 1;
  return s;
}

Subset Subset::FromMask(int universe, uint64_t mask) {
  if (universe > kWordBits) {
    throw InvalidSubsetError("bitmask form needs a universe of at most 64");
  }
  if (universe < kWordBits && (mask >> universe) != 0) {
    throw InvalidSubsetError("bitmask has bits beyond the universe");
  }
  Subset s(universe);
  if (universe > 0) s.words_[0] = mask;
  return s;
}

Subset Subset::FromIndices(int universe, std::span<const int> indices) {
  Subset s(universe);
  for (int i : indices) s.Insert(i);
  return s;
}

void Subset::CheckElement(int element) const {
  if (element < 0 || element >= universe_) {
    throw InvalidSubsetError("element " + std::to_string(element) +
                             " outside ground set of size " +
                             std::to_string(universe_));
  }
}

void Subset::CheckSameUniverse(const Subset& other) const {
  if (other.universe_ != universe_) {
    throw InvalidSubsetError("subsets of different ground sets combined");
  }
}

bool Subset::Contains(int element) const {
  CheckElement(element);
  return (words_[element / kWordBits] >> (element % kWordBits)) & 1;
}

void Subset::Insert(int element) {
  CheckElement(element);
  words_[element / kWordBits] |= uint64_t{1} << (element % kWordBits);
}

void Subset::Erase(int element) {
  CheckElement(element);
  words_[element / kWordBits] &= ~(uint64_t{1} << (element % kWordBits));
}

int Subset::Count() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool Subset::Empty() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool Subset::IsSubsetOf(const Subset& other) const {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool Subset::Intersects(const Subset& other) const {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::vector<int> Subset::Indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<int>(i) * kWordBits + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

uint64_t Subset::Mask() const {
  if (universe_ > kWordBits) {
    throw InvalidSubsetError("bitmask form needs a universe of at most 64");
  }
  return words_.empty() ? 0 : words_[0];
}

Subset Subset::Complement() const { return Full(universe_) - *this; }

Subset& Subset::operator|=(const Subset& other) {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  CheckSameUniverse(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool operator<(const Subset& a, const Subset& b) {
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

std::size_t Subset::Hash() const {
  std::size_t h = std::hash<int>{}(universe_);
  for (uint64_t w : words_) {
    h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Subset::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int i : Indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace sfm
