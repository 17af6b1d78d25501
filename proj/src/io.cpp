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

#include "omegarep/io.hpp"

#include <fstream>
#include <sstream>

#include "omegarep/fixtures.hpp"

namespace omegarep::io {

namespace {

[[noreturn]] void structure_error(const std::string& what) { throw ParseError(what, 0, 0); }

const Json& field(const Json& j, std::string_view key) {
  if (!j.is_object()) structure_error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) structure_error("missing key '" + std::string(key) + "'");
  return *it;
}

std::size_t as_size(const Json& j, std::string_view what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    structure_error(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::string as_string(const Json& j, std::string_view what) {
  if (!j.is_string()) structure_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

// Table cells: null marks a missing entry; other values are kept even when
// out of range so that validation can report them.
Element as_cell(const Json& j) {
  if (j.is_null()) return kUndefined;
  if (!j.is_number_integer()) structure_error("table entries must be integers or null");
  const long long v = j.get<long long>();
  if (v < 0 || v >= static_cast<long long>(kUndefined)) structure_error("table entry " + std::to_string(v) + " is not a valid element");
  return static_cast<Element>(v);
}

Element as_element(const Json& j, std::string_view what) {
  const std::size_t v = as_size(j, what);
  if (v >= kUndefined) structure_error(std::string(what) + " out of range");
  return static_cast<Element>(v);
}

// Flattens a nested array of shape sizes[0] x sizes[1] x ... row-major.
void flatten(const Json& j, std::span<const std::size_t> sizes, std::vector<Element>& out) {
  if (sizes.empty()) {
    out.push_back(as_cell(j));
    return;
  }
  if (!j.is_array() || j.size() != sizes[0]) {
    structure_error("expected a nested array of length " + std::to_string(sizes[0]));
  }
  for (const auto& item : j) flatten(item, sizes.subspan(1), out);
}

Json nest(std::span<const Element> values, std::span<const std::size_t> sizes) {
  if (sizes.empty()) return values[0] == kUndefined ? Json(nullptr) : Json(values[0]);
  Json arr = Json::array();
  const std::size_t stride = values.size() / sizes[0];
  for (std::size_t i = 0; i < sizes[0]; ++i) arr.push_back(nest(values.subspan(i * stride, stride), sizes.subspan(1)));
  return arr;
}

std::vector<Element> element_array(const Json& j, std::string_view what) {
  if (!j.is_array()) structure_error(std::string(what) + " must be an array");
  std::vector<Element> out;
  for (const auto& v : j) out.push_back(as_element(v, what));
  return out;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Json to_json(const Signature& sig) {
  Json ops = Json::array();
  for (const auto& op : sig.ops()) ops.push_back({{"name", op.name}, {"arity", op.arity}});
  return {{"kind", std::string(to_string(sig.kind()))}, {"ops", ops}};
}

Signature signature_from_json(const Json& j) {
  const std::string kind = as_string(field(j, "kind"), "kind");
  SignatureKind k;
  if (kind == "omega1") {
    k = SignatureKind::Omega1;
  } else if (kind == "omega2") {
    k = SignatureKind::Omega2;
  } else {
    structure_error("kind must be \"omega1\" or \"omega2\"");
  }
  const Json& ops = field(j, "ops");
  if (!ops.is_array()) structure_error("ops must be an array");
  std::vector<std::pair<std::string, long long>> decls;
  for (const auto& op : ops) {
    const Json& arity = field(op, "arity");
    if (!arity.is_number_integer()) structure_error("arity must be an integer");
    decls.emplace_back(as_string(field(op, "name"), "op name"), arity.get<long long>());
  }
  return make_signature(k, decls);
}

Json to_json(const FiniteAlgebra& alg) {
  Json tables = Json::object();
  for (std::size_t i = 0; i < alg.signature().size(); ++i) {
    const auto& op = alg.signature().op(i);
    std::vector<std::size_t> shape(op.arity, alg.size());
    tables[op.name] = nest(alg.table(i), shape);
  }
  return {{"sig", to_json(alg.signature())}, {"size", alg.size()}, {"tables", tables}};
}

FiniteAlgebra algebra_from_json(const Json& j) {
  Signature sig = signature_from_json(field(j, "sig"));
  const std::size_t size = as_size(field(j, "size"), "size");
  const Json& tables = field(j, "tables");
  if (!tables.is_object()) structure_error("tables must be an object keyed by op name");
  for (const auto& [name, _] : tables.items()) {
    if (!sig.find(name)) throw Error(ErrorKind::UnknownOp, "table for undeclared op '" + name + "'");
  }
  std::vector<std::vector<Element>> flat;
  for (const auto& op : sig.ops()) {
    std::vector<std::size_t> shape(op.arity, size);
    std::vector<Element> cells;
    flatten(field(tables, op.name), shape, cells);
    flat.push_back(std::move(cells));
  }
  return FiniteAlgebra(std::move(sig), size, std::move(flat));
}

Json to_json(const Congruence& cong) {
  return {{"size", cong.carrier_size()}, {"classes", cong.classes()}};
}

Congruence congruence_from_json(const Json& j) {
  const std::size_t size = as_size(field(j, "size"), "size");
  const Json& classes = field(j, "classes");
  if (!classes.is_array()) structure_error("classes must be an array");
  std::vector<std::vector<Element>> parts;
  for (const auto& c : classes) parts.push_back(element_array(c, "class member"));
  return Congruence::from_classes(size, parts);
}

Json to_json(const Representation& rep) {
  Json action = Json::array();
  for (const auto& h : rep.actions()) action.push_back(h.values());
  Json j = {{"actor", to_json(rep.actor())},
            {"carrier", to_json(rep.carrier())},
            {"action", action},
            {"actor_mode", rep.is_monoid() ? "monoid" : "tabular"}};
  if (rep.is_monoid()) {
    j["mul"] = rep.monoid()->mul;
    j["unit"] = rep.monoid()->unit;
  }
  return j;
}

Representation representation_from_json(const Json& j) {
  FiniteAlgebra actor = algebra_from_json(field(j, "actor"));
  FiniteAlgebra carrier = algebra_from_json(field(j, "carrier"));
  const Json& action = field(j, "action");
  if (!action.is_array()) structure_error("action must be an array of image arrays");
  std::vector<Mapping> maps;
  for (const auto& images : action) maps.emplace_back(carrier.size(), carrier.size(), element_array(images, "action image"));
  std::optional<MonoidOps> monoid;
  const std::string mode = j.contains("actor_mode") ? as_string(j["actor_mode"], "actor_mode") : "tabular";
  if (mode == "monoid") {
    monoid = MonoidOps{as_string(field(j, "mul"), "mul"), as_string(field(j, "unit"), "unit")};
  } else if (mode != "tabular") {
    structure_error("actor_mode must be \"monoid\" or \"tabular\"");
  }
  return Representation(std::move(actor), std::move(carrier), std::move(maps), std::move(monoid));
}

Json to_json(const MultiMap& map) {
  return {{"arity", map.arity()},
          {"src_sizes", map.src_sizes()},
          {"dst_size", map.dst_size()},
          {"values", nest(map.values(), map.src_sizes())}};
}

MultiMap multimap_from_json(const Json& j) {
  const std::size_t arity = as_size(field(j, "arity"), "arity");
  const Json& sizes_json = field(j, "src_sizes");
  if (!sizes_json.is_array()) structure_error("src_sizes must be an array");
  std::vector<std::size_t> sizes;
  for (const auto& s : sizes_json) sizes.push_back(as_size(s, "src_sizes entry"));
  if (sizes.size() != arity) {
    throw Error(ErrorKind::DimensionMismatch, "arity " + std::to_string(arity) + " but " +
                                                  std::to_string(sizes.size()) + " source sizes");
  }
  const std::size_t dst = as_size(field(j, "dst_size"), "dst_size");
  std::vector<Element> values;
  flatten(field(j, "values"), sizes, values);
  for (Element v : values) {
    if (v == kUndefined) structure_error("multimap values must all be present");
  }
  return MultiMap(std::move(sizes), dst, std::move(values));
}

Json to_json(const Mapping& map) {
  return {{"src_size", map.src_size()}, {"dst_size", map.dst_size()}, {"values", map.values()}};
}

Mapping mapping_from_json(const Json& j) {
  const std::size_t src = as_size(field(j, "src_size"), "src_size");
  const std::size_t dst = as_size(field(j, "dst_size"), "dst_size");
  std::vector<Element> values = element_array(field(j, "values"), "mapping value");
  if (values.size() != src) {
    throw Error(ErrorKind::DimensionMismatch, "src_size " + std::to_string(src) + " but " +
                                                  std::to_string(values.size()) + " values");
  }
  return Mapping(src, dst, std::move(values));
}

Json to_json(const RepMorphism& m) { return {{"r", to_json(m.r)}, {"R", to_json(m.R)}}; }

RepMorphism morphism_from_json(const Json& j) {
  return {mapping_from_json(field(j, "r")), mapping_from_json(field(j, "R"))};
}

Json to_json(const TensorResult& result) {
  Json factors = Json::array();
  for (const auto& rep : result.factors) factors.push_back(to_json(rep));
  Json terms = Json::array();
  for (const auto& t : result.class_terms) terms.push_back(to_string(t));
  Json status = "complete";
  if (result.truncated) {
    status = {{"truncated", {{"depth", result.truncated->depth}, {"classes", result.truncated->classes}}}};
  }
  return {{"quotient", result.quotient ? to_json(*result.quotient) : Json(nullptr)},
          {"induced", result.induced ? to_json(*result.induced) : Json(nullptr)},
          {"gen_map", to_json(result.gen_map)},
          {"status", status},
          {"factors", factors},
          {"class_terms", terms}};
}

TensorResult tensor_result_from_json(const Json& j) {
  TensorResult result;
  const Json& factors = field(j, "factors");
  if (!factors.is_array() || factors.empty()) structure_error("factors must be a non-empty array");
  for (const auto& f : factors) result.factors.push_back(representation_from_json(f));
  result.gen_map = multimap_from_json(field(j, "gen_map"));

  const Json& status = field(j, "status");
  if (status.is_object()) {
    const Json& t = field(status, "truncated");
    result.truncated = Truncation{as_size(field(t, "depth"), "depth"), as_size(field(t, "classes"), "classes")};
  } else if (status != "complete") {
    structure_error("status must be \"complete\" or {\"truncated\": ...}");
  }
  if (!result.truncated) {
    result.quotient = algebra_from_json(field(j, "quotient"));
    result.induced = representation_from_json(field(j, "induced"));
    const Json& terms = field(j, "class_terms");
    if (!terms.is_array()) structure_error("class_terms must be an array");
    for (const auto& t : terms) result.class_terms.push_back(parse_term(as_string(t, "class term"), result.quotient->signature()));
    if (result.class_terms.size() != result.quotient->size()) {
      throw Error(ErrorKind::DimensionMismatch, "one class term per quotient element expected");
    }
  }
  return result;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(what, line, column);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::NameNotFound, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::NameNotFound, "cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

std::string_view type_name(const Object& obj) {
  static constexpr std::string_view names[] = {"signature", "algebra",  "representation", "congruence",
                                               "multimap",  "mapping",  "morphism",       "tensor-result"};
  return names[obj.index()];
}

Json to_json(const Object& obj) {
  return std::visit([](const auto& o) { return to_json(o); }, obj);
}

Object object_from_json(const Json& j) {
  if (!j.is_object()) structure_error("expected a JSON object");
  if (j.contains("gen_map")) return tensor_result_from_json(j);
  if (j.contains("actor")) return representation_from_json(j);
  if (j.contains("tables")) return algebra_from_json(j);
  if (j.contains("ops")) return signature_from_json(j);
  if (j.contains("classes")) return congruence_from_json(j);
  if (j.contains("src_sizes")) return multimap_from_json(j);
  if (j.contains("src_size")) return mapping_from_json(j);
  if (j.contains("r") && j.contains("R")) return morphism_from_json(j);
  structure_error("cannot tell which kind of object this document holds");
}

void Workspace::add(std::string name, Object obj) { objects_.insert_or_assign(std::move(name), std::move(obj)); }

void Workspace::load_json(const Json& j, const std::string& fallback_name) {
  if (j.is_object() && j.contains("objects")) {
    const Json& objs = j["objects"];
    if (!objs.is_object()) structure_error("objects must map names to objects");
    for (const auto& [name, value] : objs.items()) add(name, object_from_json(value));
    return;
  }
  add(fallback_name, object_from_json(j));
}

void Workspace::load_file(const std::filesystem::path& path) {
  load_json(read_json_file(path), path.stem().string());
}

bool Workspace::contains(std::string_view name) const { return objects_.find(name) != objects_.end(); }

const Object& Workspace::get(std::string_view name) const {
  auto it = objects_.find(name);
  if (it == objects_.end()) throw Error(ErrorKind::NameNotFound, "no object named '" + std::string(name) + "'");
  return it->second;
}

std::optional<Object> builtin(std::string_view name) {
  auto numbered = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
    std::size_t n = 0;
    for (char c : name.substr(prefix.size())) {
      if (c < '0' || c > '9') return std::nullopt;
      n = n * 10 + static_cast<std::size_t>(c - '0');
      if (n > 16) return std::nullopt;
    }
    if (n == 0) return std::nullopt;
    return n;
  };
  if (auto n = numbered("z")) return fixtures::cyclic_group(*n);
  if (auto n = numbered("scal")) return fixtures::scalar_representation(*n);
  if (auto n = numbered("ring")) return fixtures::ring_representation(*n);
  if (auto n = numbered("monoid")) return fixtures::multiplicative_monoid(*n);
  return std::nullopt;
}

}  // namespace omegarep::io
