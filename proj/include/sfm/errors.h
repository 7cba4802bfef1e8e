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

#ifndef SFM_ERRORS_H_
#define SFM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sfm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A subset refers to an element outside the ground set, or was built for a
// ground set of a different size.
class InvalidSubsetError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// A caller promised a property (for example a negative set value of a given
// size) that turned out not to hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised when a solver invariant is found broken. Always indicates a bug.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

// Malformed instance or certificate input.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace sfm

#endif  // SFM_ERRORS_H_
