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

#include "omegarep/signature.hpp"

#include <unordered_set>

namespace omegarep {

std::string_view to_string(SignatureKind kind) {
  return kind == SignatureKind::Omega1 ? "omega1" : "omega2";
}

Signature::Signature(SignatureKind kind, std::vector<OpDecl> ops) : kind_(kind), ops_(std::move(ops)) {
  std::unordered_set<std::string> seen;
  for (const auto& op : ops_) {
    if (!seen.insert(op.name).second) {
      throw Error(ErrorKind::DuplicateOpName, "operation '" + op.name + "' declared twice");
    }
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownOp, "no operation named '" + std::string(name) + "'");
}

Signature make_signature(SignatureKind kind,
                         const std::vector<std::pair<std::string, long long>>& ops) {
  std::vector<OpDecl> decls;
  decls.reserve(ops.size());
  for (const auto& [name, arity] : ops) {
    if (arity < 0) {
      throw Error(ErrorKind::NegativeArity,
                  "operation '" + name + "' has arity " + std::to_string(arity));
    }
    decls.push_back({name, static_cast<std::size_t>(arity)});
  }
  return Signature(kind, std::move(decls));
}

}  // namespace omegarep
