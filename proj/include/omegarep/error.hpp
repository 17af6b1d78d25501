// Copyright 2026 The omegarep Authors
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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omegarep {

using Element = std::uint32_t;
using Tuple = std::vector<Element>;

enum class ErrorKind {
  DuplicateOpName,
  NegativeArity,
  UnknownOp,
  GeneratorOutOfRange,
  ActWithoutRepresentation,
  BudgetExceeded,
  SignatureMismatch,
  DimensionMismatch,
  EmptyList,
  InvalidAlgebra,
  NotACongruence,
  KernelTooSmall,
  NotCoordinated,
  InvalidRepresentation,
  NotAMorphism,
  ActorMismatch,
  MissingActorMap,
  NotAReducedPolymorphism,
  MonoidUnitMismatch,
  NotMonoidMode,
  TruncatedResult,
  FactorizationInconsistent,
  ParseError,
  NameNotFound,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error raised by the library. The kind is stable and is what
/// the CLI and the Python bindings dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// x ~ y under the congruence but the map separates them.
class KernelTooSmall : public Error {
 public:
  KernelTooSmall(Element x, Element y);
  Element x, y;
};

/// Two componentwise-equivalent tuples whose images under `op` fall in
/// different classes.
class NotACongruence : public Error {
 public:
  NotACongruence(std::string op, Tuple lhs, Tuple rhs);
  std::string op;
  Tuple lhs, rhs;
};

class NotCoordinated : public Error {
 public:
  NotCoordinated(Element actor, Element x, Element y);
  Element actor, x, y;
};

/// line 0 means the document parsed but its structure is wrong.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line, column;
};

/// Global budget on enumerated objects (terms, maps, saturation nodes).
/// Defaults to 100000; the OMEGA_REP_BUDGET environment variable overrides it.
std::size_t term_budget();

inline constexpr std::size_t kDefaultTermBudget = 100000;

}  // namespace omegarep
