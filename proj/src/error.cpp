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

#include "omegarep/error.hpp"

#include <cstdlib>
#include <string>

namespace omegarep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateOpName: return "DuplicateOpName";
    case ErrorKind::NegativeArity: return "NegativeArity";
    case ErrorKind::UnknownOp: return "UnknownOp";
    case ErrorKind::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorKind::ActWithoutRepresentation: return "ActWithoutRepresentation";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::KernelTooSmall: return "KernelTooSmall";
    case ErrorKind::NotCoordinated: return "NotCoordinated";
    case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::ActorMismatch: return "ActorMismatch";
    case ErrorKind::MissingActorMap: return "MissingActorMap";
    case ErrorKind::NotAReducedPolymorphism: return "NotAReducedPolymorphism";
    case ErrorKind::MonoidUnitMismatch: return "MonoidUnitMismatch";
    case ErrorKind::NotMonoidMode: return "NotMonoidMode";
    case ErrorKind::TruncatedResult: return "TruncatedResult";
    case ErrorKind::FactorizationInconsistent: return "FactorizationInconsistent";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NameNotFound: return "NameNotFound";
  }
  return "Unknown";
}

namespace {
std::string tuple_text(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}
}  // namespace

KernelTooSmall::KernelTooSmall(Element x_, Element y_)
    : Error(ErrorKind::KernelTooSmall,
            "elements " + std::to_string(x_) + " and " + std::to_string(y_) +
                " are congruent but have different images"),
      x(x_),
      y(y_) {}

NotACongruence::NotACongruence(std::string op_, Tuple lhs_, Tuple rhs_)
    : Error(ErrorKind::NotACongruence,
            op_ + tuple_text(lhs_) + " and " + op_ + tuple_text(rhs_) +
                " have congruent arguments but images in different classes"),
      op(std::move(op_)),
      lhs(std::move(lhs_)),
      rhs(std::move(rhs_)) {}

NotCoordinated::NotCoordinated(Element actor_, Element x_, Element y_)
    : Error(ErrorKind::NotCoordinated,
            "action of " + std::to_string(actor_) + " separates congruent elements " +
                std::to_string(x_) + " and " + std::to_string(y_)),
      actor(actor_),
      x(x_),
      y(y_) {}

ParseError::ParseError(const std::string& what, std::size_t line_, std::size_t column_)
    : Error(ErrorKind::ParseError,
            line_ == 0 ? what
                       : "line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what),
      line(line_),
      column(column_) {}

std::size_t term_budget() {
  if (const char* env = std::getenv("OMEGA_REP_BUDGET")) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultTermBudget;
}

}  // namespace omegarep
