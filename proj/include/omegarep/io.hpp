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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "omegarep/algebra.hpp"
#include "omegarep/congruence.hpp"
#include "omegarep/multimap.hpp"
#include "omegarep/representation.hpp"
#include "omegarep/signature.hpp"
#include "omegarep/tensor.hpp"

namespace omegarep::io {

using Json = nlohmann::ordered_json;

Json to_json(const Signature& sig);
Json to_json(const FiniteAlgebra& alg);
Json to_json(const Congruence& cong);
Json to_json(const Representation& rep);
Json to_json(const MultiMap& map);
Json to_json(const Mapping& map);
Json to_json(const RepMorphism& m);
Json to_json(const TensorResult& result);

// Decoders throw ParseError on missing keys or wrong value types, and the
// constructors' own errors (DimensionMismatch, InvalidAlgebra, ...) on
// well-formed but inconsistent data.
Signature signature_from_json(const Json& j);
FiniteAlgebra algebra_from_json(const Json& j);
Congruence congruence_from_json(const Json& j);
Representation representation_from_json(const Json& j);
MultiMap multimap_from_json(const Json& j);
Mapping mapping_from_json(const Json& j);
RepMorphism morphism_from_json(const Json& j);
TensorResult tensor_result_from_json(const Json& j);

/// Parses text, reporting syntax errors as ParseError with 1-based line and
/// column.
Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

using Object = std::variant<Signature, FiniteAlgebra, Representation, Congruence, MultiMap, Mapping,
                            RepMorphism, TensorResult>;

std::string_view type_name(const Object& obj);
Json to_json(const Object& obj);

/// Guesses the object type of a single-object document from its keys.
Object object_from_json(const Json& j);

/// Named objects. A workspace document is {"objects": {name: object, ...}};
/// any other document holds a single object named after the file stem.
class Workspace {
 public:
  void add(std::string name, Object obj);
  void load_file(const std::filesystem::path& path);
  void load_json(const Json& j, const std::string& fallback_name);

  bool contains(std::string_view name) const;
  const Object& get(std::string_view name) const;
  const std::map<std::string, Object, std::less<>>& objects() const noexcept { return objects_; }

 private:
  std::map<std::string, Object, std::less<>> objects_;
};

/// Built-in objects addressable by name: zN (cyclic group), scalN and ringN
/// (scalar and full-ring monoid actions on Z/N), monoidN (multiplicative
/// monoid of Z/N), for 1 <= N <= 16.
std::optional<Object> builtin(std::string_view name);

}  // namespace omegarep::io
