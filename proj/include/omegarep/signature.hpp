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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omegarep/error.hpp"

namespace omegarep {

/// Which side of a representation a signature describes: omega1 for the
/// acting algebra, omega2 for the algebra being acted on.
enum class SignatureKind { Omega1, Omega2 };

std::string_view to_string(SignatureKind kind);

struct OpDecl {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const OpDecl&, const OpDecl&) = default;
};

class Signature {
 public:
  Signature() = default;

  /// Throws DuplicateOpName when two operations share a name.
  Signature(SignatureKind kind, std::vector<OpDecl> ops);

  SignatureKind kind() const noexcept { return kind_; }
  const std::vector<OpDecl>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  const OpDecl& op(std::size_t i) const { return ops_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find, but throws UnknownOp.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  SignatureKind kind_ = SignatureKind::Omega2;
  std::vector<OpDecl> ops_;
};

/// Validating constructor taking raw (possibly negative) arities, as they
/// arrive from user input.
Signature make_signature(SignatureKind kind,
                         const std::vector<std::pair<std::string, long long>>& ops);

}  // namespace omegarep
