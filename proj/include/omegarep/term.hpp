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

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omegarep/error.hpp"
#include "omegarep/signature.hpp"

namespace omegarep {

class FiniteAlgebra;
class Representation;

/// Immutable ground term over a list of generators. Copies share structure;
/// equality and ordering are structural.
///
/// Terms are totally ordered by depth, then node kind (generator < apply <
/// act), then generator index / op index / actor element, then children
/// lexicographically. This order picks canonical class representatives.
class Term {
 public:
  enum class Kind : unsigned char { Generator, Apply, Act };

  static Term generator(std::size_t index);
  /// Throws UnknownOp if `op` is not in `sig` or the argument count differs
  /// from its arity.
  static Term apply(const Signature& sig, std::string_view op, std::vector<Term> args);
  static Term apply(const Signature& sig, std::size_t op_index, std::vector<Term> args);
  static Term act(Element actor, Term arg);

  Kind kind() const noexcept { return node_->kind; }
  /// Generator index, op index or actor element, depending on kind().
  std::size_t index() const noexcept { return node_->index; }
  const std::string& op() const noexcept { return node_->op; }
  std::span<const Term> args() const noexcept { return node_->args; }
  std::size_t depth() const noexcept { return node_->depth; }
  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::size_t index;
    std::string op;
    std::vector<Term> args;
    std::size_t depth;
    std::size_t hash;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Kind kind, std::size_t index, std::string op, std::vector<Term> args);

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

/// Text form: `g3`, `add(g0,g1)`, `zero()`, `@1(g0)` for the action of actor
/// element 1.
std::string to_string(const Term& term);
/// Inverse of to_string. Throws ParseError on malformed text and UnknownOp on
/// symbols missing from `sig`.
Term parse_term(std::string_view text, const Signature& sig);

/// Bottom-up evaluation by table lookup. Act nodes need `rep`, whose carrier
/// must be `alg`.
Element eval_term(const FiniteAlgebra& alg, const Term& term, std::span<const Element> gens,
                  const Representation* rep = nullptr);

/// All terms of depth <= `depth` over `generator_count` generators, the ops
/// of `sig`, and one action symbol per element of {0..action_count-1}.
/// Sorted by the term order, so the result for depth d is a prefix of the
/// result for depth d+1. Throws BudgetExceeded past `budget` terms.
std::vector<Term> enumerate_terms(const Signature& sig, std::size_t generator_count,
                                  std::size_t action_count, std::size_t depth,
                                  std::size_t budget = term_budget());

}  // namespace omegarep
