// Copyright 2026 The qtk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qtk {

/// Tolerance used for every unitarity, normalization and phase comparison.
inline constexpr double kTolerance = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the operation's domain (bad index, bad size).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string &what) : Error("domain error: " + what) {}
};

/// Structured input failed validation (non-unitary gate, bad oracle range).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string &what) : Error("validation error: " + what) {}
};

/// An internal invariant was observed broken at runtime.
class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string &what) : Error("invariant violation: " + what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string &what) : Error("precondition error: " + what) {}
};

/// Malformed JSON or an unknown method/builtin name.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string &what) : Error("parse error: " + what) {}
};

}  // namespace qtk
