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

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "omegarep/congruence.hpp"
#include "omegarep/io.hpp"
#include "omegarep/polymorphism.hpp"
#include "omegarep/representation.hpp"
#include "omegarep/tensor.hpp"

#ifndef OMEGAREP_FIXTURE_DIR
#define OMEGAREP_FIXTURE_DIR "fixtures"
#endif

namespace fs = std::filesystem;
using namespace omegarep;
using io::Json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kTruncated = 3;

std::string tuple_text(std::span<const Element> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string witness_text(const OpWitness& w) { return w.op + tuple_text(w.args); }

// Resolves names to objects: loaded workspaces first, then file paths, then
// built-in names, then <name>.json in the fixture directories.
class Resolver {
 public:
  void load_workspace(const fs::path& path) {
    Json j = io::read_json_file(path);
    ws_.load_json(j, path.stem().string());
    if (!(j.is_object() && j.contains("objects"))) context_[path.stem().string()] = j;
  }

  const io::Object& get(const std::string& name) {
    if (ws_.contains(name)) return ws_.get(name);
    if (fs::is_regular_file(name)) return load_as(name, name);
    if (auto obj = io::builtin(name)) {
      ws_.add(name, std::move(*obj));
      return ws_.get(name);
    }
    for (const fs::path dir : fixture_dirs()) {
      const fs::path candidate = dir / (name + ".json");
      if (fs::is_regular_file(candidate)) return load_as(candidate, name);
    }
    throw Error(ErrorKind::NameNotFound, "no object, file or built-in named '" + name + "'");
  }

  template <class T>
  const T& get_as(const std::string& name) {
    const io::Object& obj = get(name);
    if (const T* p = std::get_if<T>(&obj)) return *p;
    io::Object probe{T{}};
    throw Error(ErrorKind::NameNotFound, "'" + name + "' is a " + std::string(io::type_name(obj)) +
                                             ", expected a " + std::string(io::type_name(probe)));
  }

  // Optional "over"/"into" hints stored beside a multimap in its file.
  std::vector<std::string> hint_over(const std::string& name) const {
    std::vector<std::string> out;
    if (auto it = context_.find(name); it != context_.end() && it->second.contains("over")) {
      for (const auto& v : it->second["over"]) out.push_back(v.get<std::string>());
    }
    return out;
  }
  std::optional<std::string> hint_into(const std::string& name) const {
    if (auto it = context_.find(name); it != context_.end() && it->second.contains("into")) {
      return it->second["into"].get<std::string>();
    }
    return std::nullopt;
  }

 private:
  static std::vector<fs::path> fixture_dirs() {
    std::vector<fs::path> dirs;
    if (const char* env = std::getenv("OMEGAREP_FIXTURES")) dirs.emplace_back(env);
    dirs.emplace_back("fixtures");
    dirs.emplace_back(OMEGAREP_FIXTURE_DIR);
    return dirs;
  }

  const io::Object& load_as(const fs::path& path, const std::string& name) {
    Json j = io::read_json_file(path);
    ws_.add(name, io::object_from_json(j));
    context_[name] = std::move(j);
    return ws_.get(name);
  }

  io::Workspace ws_;
  std::map<std::string, Json> context_;
};

struct Report {
  int code = kPass;
  Json json = Json::object();
  std::vector<std::string> lines;
};

void emit(const Report& r, bool as_json) {
  if (as_json) {
    std::cout << r.json.dump(2) << '\n';
  } else {
    for (const auto& line : r.lines) std::cout << line << '\n';
  }
}

Report pass_fail(bool ok, const std::string& what, const std::optional<std::string>& witness) {
  Report r;
  r.code = ok ? kPass : kFail;
  r.json["status"] = ok ? "pass" : "fail";
  r.json["check"] = what;
  if (witness) r.json["witness"] = *witness;
  r.lines.push_back(what + ": " + (ok ? "pass" : "fail"));
  if (witness) r.lines.push_back("witness: " + *witness);
  return r;
}

std::vector<std::string> validate_object(const io::Object& obj) {
  std::vector<std::string> out;
  auto algebra = [&](const FiniteAlgebra& alg, const std::string& prefix) {
    for (const auto& v : validate_algebra(alg).violations) {
      out.push_back(prefix + v.op + tuple_text(v.args) +
                    (v.kind == AlgebraViolation::Kind::NotTotal ? " is undefined"
                                                                : " = " + std::to_string(v.value) + " is out of range"));
    }
  };
  auto representation = [&](const Representation& rep) {
    for (const auto& v : validate_representation(rep).violations) {
      switch (v.kind) {
        case RepViolation::Kind::NotEndomorphism:
          out.push_back("action of " + std::to_string(v.a) + " is not an endomorphism at " + witness_text(*v.op));
          break;
        case RepViolation::Kind::MonoidLaw:
          out.push_back("action of " + std::to_string(v.a) + "*" + std::to_string(v.b) +
                        " differs from the composite action");
          break;
        case RepViolation::Kind::UnitNotIdentity:
          out.push_back("unit " + std::to_string(v.a) + " does not act as the identity");
          break;
      }
    }
  };
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, FiniteAlgebra>) {
          algebra(o, "");
        } else if constexpr (std::is_same_v<T, Representation>) {
          representation(o);
        } else if constexpr (std::is_same_v<T, TensorResult>) {
          if (o.complete()) {
            algebra(*o.quotient, "quotient ");
            representation(*o.induced);
          }
        }
      },
      obj);
  return out;
}

int cmd_validate(const std::vector<std::string>& paths, bool as_json) {
  Report r;
  r.json["files"] = Json::array();
  for (const auto& path : paths) {
    const Json doc = io::read_json_file(path);
    Json file = {{"path", path}, {"objects", Json::array()}};
    std::vector<std::pair<std::string, Json>> entries;
    if (doc.is_object() && doc.contains("objects") && doc["objects"].is_object()) {
      for (const auto& [name, value] : doc["objects"].items()) entries.emplace_back(name, value);
    } else {
      entries.emplace_back(fs::path(path).stem().string(), doc);
    }
    for (const auto& [name, value] : entries) {
      std::vector<std::string> violations;
      std::string type = "unknown";
      try {
        const io::Object obj = io::object_from_json(value);
        type = io::type_name(obj);
        violations = validate_object(obj);
      } catch (const omegarep::ParseError&) {
        throw;
      } catch (const Error& e) {
        violations.push_back(e.what());
      }
      const bool ok = violations.empty();
      if (!ok) r.code = kFail;
      file["objects"].push_back({{"name", name}, {"type", type}, {"ok", ok}, {"violations", violations}});
      r.lines.push_back(path + ": " + name + " (" + type + "): " + (ok ? "ok" : "invalid"));
      for (const auto& v : violations) std::cerr << path << ": " << name << ": " << v << '\n';
    }
    r.json["files"].push_back(file);
  }
  r.json["status"] = r.code == kPass ? "pass" : "fail";
  emit(r, as_json);
  return r.code;
}

// Splits "R over A B --into T" style argument lists.
struct CheckArgs {
  std::vector<std::string> head;
  std::vector<std::string> over;
};

CheckArgs split_over(const std::vector<std::string>& args) {
  CheckArgs out;
  bool after = false;
  for (const auto& a : args) {
    if (a == "over") {
      after = true;
    } else {
      (after ? out.over : out.head).push_back(a);
    }
  }
  return out;
}

void expect_count(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw Error(ErrorKind::DimensionMismatch, "usage: check " + usage);
}

std::vector<Representation> resolve_reps(Resolver& res, const std::vector<std::string>& names) {
  std::vector<Representation> reps;
  for (const auto& n : names) reps.push_back(res.get_as<Representation>(n));
  return reps;
}

Representation resolve_target(Resolver& res, const std::string& map_name, const std::optional<std::string>& into,
                              const std::vector<Representation>& reps, std::size_t dst_size) {
  if (into) return res.get_as<Representation>(*into);
  if (auto hint = res.hint_into(map_name)) return res.get_as<Representation>(*hint);
  for (const auto& rep : reps) {
    if (rep.carrier().size() == dst_size) return rep;
  }
  throw Error(ErrorKind::NameNotFound, "no target representation given (use --into)");
}

std::vector<std::string> resolve_over(Resolver& res, const std::string& map_name, std::vector<std::string> over,
                                      std::size_t arity) {
  if (over.empty()) over = res.hint_over(map_name);
  if (over.empty()) throw Error(ErrorKind::NameNotFound, "no source representations given (use 'over REP...')");
  if (over.size() == 1 && arity > 1) over.assign(arity, over.front());
  return over;
}

int cmd_check(Resolver& res, const std::string& kind, const std::vector<std::string>& raw,
              const std::optional<std::string>& into, bool as_json) {
  Report r;
  if (kind == "hom") {
    expect_count(raw, 3, "hom MAP SRC DST");
    const auto& src = res.get_as<FiniteAlgebra>(raw[1]);
    const auto& dst = res.get_as<FiniteAlgebra>(raw[2]);
    const Mapping h = raw[0] == "identity" ? Mapping::identity(src.size()) : res.get_as<Mapping>(raw[0]);
    const HomCheck c = is_homomorphism(h, src, dst);
    r = pass_fail(c.ok, "hom", c.witness ? std::optional(witness_text(*c.witness)) : std::nullopt);
  } else if (kind == "rep") {
    expect_count(raw, 1, "rep REP");
    const auto violations = validate_object(res.get(raw[0]));
    r = pass_fail(violations.empty(), "rep", violations.empty() ? std::nullopt : std::optional(violations.front()));
  } else if (kind == "morphism") {
    expect_count(raw, 3, "morphism MORPHISM SRC DST");
    const auto& src = res.get_as<Representation>(raw[1]);
    const auto& dst = res.get_as<Representation>(raw[2]);
    const RepMorphism m = raw[0] == "identity" ? identity_morphism(src) : res.get_as<RepMorphism>(raw[0]);
    const MorphismCheck c = is_morphism(m, src, dst);
    std::optional<std::string> w;
    if (c.witness) {
      switch (c.witness->clause) {
        case MorphismWitness::Clause::ActorHom: w = "actor map fails at " + witness_text(*c.witness->op); break;
        case MorphismWitness::Clause::CarrierHom: w = "carrier map fails at " + witness_text(*c.witness->op); break;
        case MorphismWitness::Clause::Intertwining:
          w = "action of " + std::to_string(c.witness->actor) + " at element " + std::to_string(c.witness->element);
          break;
      }
    }
    r = pass_fail(c.ok, "morphism", w);
  } else if (kind == "polymorphism") {
    const CheckArgs a = split_over(raw);
    expect_count(a.head, 2, "polymorphism ACTOR_MAP MAP over REP... [--into T]");
    const auto& rmap = res.get_as<MultiMap>(a.head[0]);
    const auto& R = res.get_as<MultiMap>(a.head[1]);
    const auto reps = resolve_reps(res, resolve_over(res, a.head[1], a.over, R.arity()));
    const Representation target = resolve_target(res, a.head[1], into, reps, R.dst_size());
    const PolyCheck c = is_polymorphism(rmap, R, reps, target);
    r = pass_fail(c.ok, "polymorphism", c.witness ? std::optional(c.witness->describe()) : std::nullopt);
  } else if (kind == "reduced") {
    const CheckArgs a = split_over(raw);
    expect_count(a.head, 1, "reduced MAP [over REP...] [--into T]");
    const auto& R = res.get_as<MultiMap>(a.head[0]);
    const auto reps = resolve_reps(res, resolve_over(res, a.head[0], a.over, R.arity()));
    const Representation target = resolve_target(res, a.head[0], into, reps, R.dst_size());
    const PolyCheck c = is_reduced_polymorphism(R, reps, target);
    r = pass_fail(c.ok, "reduced", c.witness ? std::optional(c.witness->describe()) : std::nullopt);
  } else {
    throw Error(ErrorKind::NameNotFound, "unknown check kind '" + kind + "' (hom, rep, morphism, polymorphism, reduced)");
  }
  emit(r, as_json);
  return r.code;
}

std::vector<ElementPair> parse_pairs(const std::vector<std::string>& texts) {
  std::vector<ElementPair> pairs;
  for (const auto& t : texts) {
    const auto comma = t.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument(t);
      pairs.emplace_back(static_cast<Element>(std::stoul(t.substr(0, comma))),
                         static_cast<Element>(std::stoul(t.substr(comma + 1))));
    } catch (const std::logic_error&) {
      throw omegarep::ParseError("pair '" + t + "' is not of the form x,y", 0, 0);
    }
  }
  return pairs;
}

int cmd_quotient(Resolver& res, const std::string& name, const std::vector<std::string>& pair_texts,
                 const std::optional<std::string>& cong_name, const std::optional<std::string>& out, bool as_json) {
  const io::Object& obj = res.get(name);
  const FiniteAlgebra* alg = std::get_if<FiniteAlgebra>(&obj);
  const Representation* rep = std::get_if<Representation>(&obj);
  if (!alg && !rep) throw Error(ErrorKind::NameNotFound, "'" + name + "' is neither an algebra nor a representation");
  const FiniteAlgebra& carrier = alg ? *alg : rep->carrier();
  require_valid(carrier);

  Congruence cong;
  if (cong_name) {
    cong = res.get_as<Congruence>(*cong_name);
    if (cong.carrier_size() != carrier.size()) throw Error(ErrorKind::DimensionMismatch, "congruence size differs from the carrier");
  } else {
    const auto pairs = parse_pairs(pair_texts);
    for (auto [x, y] : pairs) {
      if (x >= carrier.size() || y >= carrier.size()) throw Error(ErrorKind::DimensionMismatch, "pair element out of range");
    }
    cong = congruence_closure(carrier, pairs, rep ? std::span<const Mapping>(rep->actions()) : std::span<const Mapping>());
  }

  Report r;
  Json written;
  try {
    if (rep) {
      QuotientRepresentation q = quotient_representation(*rep, cong);
      written = io::to_json(q.rep);
      r.json["projection"] = q.projection.R.values();
    } else {
      Quotient q = quotient_algebra(*alg, cong);
      written = io::to_json(q.algebra);
      r.json["projection"] = q.projection.values();
    }
  } catch (const omegarep::NotACongruence& e) {
    r = pass_fail(false, "quotient", std::string(e.what()));
    emit(r, as_json);
    return kFail;
  } catch (const omegarep::NotCoordinated& e) {
    r = pass_fail(false, "quotient", std::string(e.what()));
    emit(r, as_json);
    return kFail;
  }
  r.json["status"] = "pass";
  r.json["congruence"] = io::to_json(cong);
  r.json["quotient"] = written;
  r.lines.push_back("quotient: " + std::to_string(cong.class_count()) + " classes");
  for (const auto& cls : cong.classes()) r.lines.push_back("class " + tuple_text(cls));
  if (out) {
    io::write_json_file(*out, written);
    r.lines.push_back("wrote " + *out);
  }
  emit(r, as_json);
  return kPass;
}

int cmd_tensor(Resolver& res, const std::vector<std::string>& names, std::size_t depth, std::size_t classes,
               const std::optional<std::string>& out, bool as_json) {
  if (depth == 0 || classes == 0) throw Error(ErrorKind::DimensionMismatch, "budgets must be positive");
  const auto reps = resolve_reps(res, names);
  TensorBudgets budgets;
  budgets.depth = depth;
  budgets.classes = classes;
  const TensorResult result = tensor_product(reps, budgets);
  const Json doc = io::to_json(result);
  if (out) io::write_json_file(*out, doc);

  Report r;
  r.code = result.complete() ? kPass : kTruncated;
  r.json = {{"status", result.complete() ? "complete" : "truncated"}, {"result", doc}};
  if (out) r.json["out"] = *out;
  if (result.complete()) {
    r.lines.push_back("complete: " + std::to_string(result.quotient->size()) + " classes");
    for (std::size_t i = 0; i < result.class_terms.size(); ++i) {
      r.lines.push_back("class " + std::to_string(i) + ": " + to_string(result.class_terms[i]));
    }
  } else {
    r.lines.push_back("truncated at depth " + std::to_string(result.truncated->depth) + " with " +
                      std::to_string(result.truncated->classes) + " classes");
  }
  if (out) r.lines.push_back("wrote " + *out);
  emit(r, as_json);
  return r.code;
}

int cmd_factor(Resolver& res, const std::string& result_name, const std::string& map_name,
               const std::optional<std::string>& into, const std::optional<std::string>& out, bool as_json) {
  const auto& result = res.get_as<TensorResult>(result_name);
  const auto& g2 = res.get_as<MultiMap>(map_name);
  const Representation target = resolve_target(res, map_name, into, result.factors, g2.dst_size());
  RepMorphism h;
  try {
    h = factor_polymorphism(result, g2, target);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAReducedPolymorphism && e.kind() != ErrorKind::FactorizationInconsistent) throw;
    Report r = pass_fail(false, "factor", std::string(e.what()));
    emit(r, as_json);
    return kFail;
  }
  if (out) io::write_json_file(*out, io::to_json(h));
  Report r;
  r.json = {{"status", "pass"}, {"morphism", io::to_json(h)}};
  r.lines.push_back("factor: pass");
  std::string values;
  for (Element v : h.R.values()) values += (values.empty() ? "" : " ") + std::to_string(v);
  r.lines.push_back("h: " + values);
  if (out) r.lines.push_back("wrote " + *out);
  emit(r, as_json);
  return kPass;
}

int cmd_universal(Resolver& res, const std::string& result_name, std::size_t bound, bool as_json) {
  const auto& result = res.get_as<TensorResult>(result_name);
  const UniversalReport u = verify_universal_property(result, result.factors, bound);
  Report r;
  r.code = u.ok() ? kPass : kFail;
  r.json = {{"status", u.ok() ? "pass" : "fail"},
            {"bound", bound},
            {"targets", u.targets},
            {"representations", u.representations},
            {"candidates", u.candidates},
            {"reduced_polymorphisms", u.reduced_polymorphisms},
            {"factored", u.factored},
            {"unique", u.unique},
            {"counterexamples", u.counterexamples}};
  r.lines.push_back(std::string("universal: ") + (u.ok() ? "pass" : "fail"));
  r.lines.push_back("targets " + std::to_string(u.targets) + ", representations " +
                    std::to_string(u.representations) + ", candidates " + std::to_string(u.candidates) +
                    ", reduced " + std::to_string(u.reduced_polymorphisms) + ", unique " + std::to_string(u.unique));
  for (const auto& c : u.counterexamples) r.lines.push_back("counterexample: " + c);
  emit(r, as_json);
  return r.code;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BudgetExceeded: return kTruncated;
    default: return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite universal-algebra representations: checks, quotients and tensor products"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::vector<std::string> workspaces;
  app.add_flag("--json", as_json, "Emit a JSON report");
  app.add_option("-w,--workspace", workspaces, "Load named objects from a JSON file")->check(CLI::ExistingFile);

  std::vector<std::string> validate_paths;
  auto* validate = app.add_subcommand("validate", "Validate every object in the given files");
  validate->add_option("paths", validate_paths, "JSON files")->required();

  std::string check_kind;
  std::vector<std::string> check_args;
  std::optional<std::string> into;
  auto* check = app.add_subcommand("check", "Check hom, rep, morphism, polymorphism or reduced");
  check->add_option("kind", check_kind, "hom | rep | morphism | polymorphism | reduced")->required();
  check->add_option("args", check_args, "Object names or paths; 'over' separates source representations");
  check->add_option("--into", into, "Target representation");

  std::string quotient_name;
  std::vector<std::string> pairs;
  std::optional<std::string> cong_name, out;
  auto* quotient = app.add_subcommand("quotient", "Quotient by the congruence generated by pairs");
  quotient->add_option("object", quotient_name, "Algebra or representation")->required();
  auto* pair_opt = quotient->add_option("--pair", pairs, "Generating pair x,y (repeatable)");
  quotient->add_option("--congruence", cong_name, "Use a stored congruence")->excludes(pair_opt);

  std::vector<std::string> tensor_reps;
  std::size_t depth = TensorBudgets{}.depth;
  std::size_t classes = TensorBudgets{}.classes;
  auto* tensor = app.add_subcommand("tensor", "Tensor product of representations");
  tensor->add_option("reps", tensor_reps, "Representations")->required();
  tensor->add_option("--depth", depth, "Saturation depth budget")->capture_default_str();
  tensor->add_option("--classes", classes, "Class budget")->capture_default_str();

  std::string result_name, map_name;
  auto* factor = app.add_subcommand("factor", "Factor a reduced polymorphism through a tensor result");
  factor->add_option("result", result_name, "Tensor result")->required();
  factor->add_option("map", map_name, "Reduced polymorphism")->required();
  factor->add_option("--into", into, "Target representation");

  std::size_t bound = 2;
  auto* universal = app.add_subcommand("universal", "Verify the universal property by enumeration");
  universal->add_option("result", result_name, "Tensor result")->required();
  universal->add_option("--bound", bound, "Largest target size")->capture_default_str();

  for (auto* sub : {quotient, tensor, factor}) sub->add_option("--out", out, "Write the result to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    Resolver res;
    for (const auto& w : workspaces) res.load_workspace(w);
    if (*validate) return cmd_validate(validate_paths, as_json);
    if (*check) return cmd_check(res, check_kind, check_args, into, as_json);
    if (*quotient) return cmd_quotient(res, quotient_name, pairs, cong_name, out, as_json);
    if (*tensor) return cmd_tensor(res, tensor_reps, depth, classes, out, as_json);
    if (*factor) return cmd_factor(res, result_name, map_name, into, out, as_json);
    if (*universal) return cmd_universal(res, result_name, bound, as_json);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
