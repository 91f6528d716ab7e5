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

#pragma once

#include <stdexcept>
#include <string>

namespace matroidsum {

// Base class for every error raised by the library. Callers that only care
// about "bad input" vs "counterexample" catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different groups or over different ground sets.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// A value or argument outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace matroidsum
