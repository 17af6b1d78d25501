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
#include <span>
#include <string>
#include <vector>

#include "omegarep/multimap.hpp"
#include "omegarep/representation.hpp"
#include "omegarep/term.hpp"

namespace omegarep {

struct TensorBudgets {
  std::size_t depth = 4;
  std::size_t classes = 10000;
  /// Cap on saturation nodes; BudgetExceeded past it.
  std::size_t nodes = term_budget();
};

struct Truncation {
  std::size_t depth = 0;
  std::size_t classes = 0;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// B₁ ⊗ … ⊗ Bₙ as the quotient M/N of the term algebra over the generator
/// tuples, together with the induced representation F and the canonical
/// reduced polymorphism g₁ (gen_map).
///
/// Generator tuples are numbered row-major, so term g<i> is the tuple at
/// index i of gen_map's value array. quotient, induced and class_terms are
/// present only when the result is complete.
struct TensorResult {
  std::vector<Representation> factors;
  std::optional<FiniteAlgebra> quotient;
  std::optional<Representation> induced;
  MultiMap gen_map;
  /// Least term of each class; class i of the quotient is class_terms[i].
  std::vector<Term> class_terms;
  std::optional<Truncation> truncated;

  bool complete() const noexcept { return !truncated.has_value(); }
  friend bool operator==(const TensorResult&, const TensorResult&) = default;
};

/// Saturates the term universe level by level until a level adds no new
/// class (complete) or a budget runs out (truncated).
///
/// Relations: for every op ω, slot k and arguments, the generator with
/// ω(y₁…y_p) in slot k equals ω of the p generators with yᵢ in slot k; for
/// every actor element c, moving f_k(c) between slots does not change the
/// generator. The action of c on terms is pushed down to the first slot of
/// each generator, which makes the induced action an endomorphism and a
/// monoid action by construction.
///
/// Throws EmptyList, ActorMismatch, NotMonoidMode, SignatureMismatch,
/// InvalidRepresentation, or BudgetExceeded (node budget).
TensorResult tensor_product(std::span<const Representation> reps, const TensorBudgets& budgets = {});
TensorResult tensor_power(const Representation& rep, std::size_t n, const TensorBudgets& budgets = {});

/// d₁ ⊗ … ⊗ dₙ. Throws TruncatedResult or DimensionMismatch.
Element tensor_element(const TensorResult& result, std::span<const Element> tuple);

/// Whether the images of the generator tuples generate the whole quotient
/// under Ω₂ ops and the induced action.
bool generators_generate(const TensorResult& result);

/// The unique (id, h) from result.induced to `target` with h ∘ g₁ = g2,
/// obtained by evaluating each class's canonical term in the target.
/// Throws TruncatedResult, NotAReducedPolymorphism, or
/// FactorizationInconsistent when g2 does not respect the relations.
RepMorphism factor_polymorphism(const TensorResult& result, const MultiMap& g2, const Representation& target);

/// Ω₂-algebras of size <= bound to test universality against. For the
/// add/neg/zero signature these are the abelian groups of each order, one
/// per isomorphism class; for other signatures every table assignment is
/// enumerated (BudgetExceeded if that passes `budget`).
std::vector<FiniteAlgebra> target_library(const Signature& sig, std::size_t bound,
                                          std::size_t budget = term_budget());

struct UniversalReport {
  std::size_t targets = 0;
  std::size_t representations = 0;
  std::size_t candidates = 0;
  std::size_t reduced_polymorphisms = 0;
  std::size_t factored = 0;
  std::size_t unique = 0;
  std::vector<std::string> counterexamples;

  bool ok() const noexcept { return counterexamples.empty(); }
};

/// For every target algebra, every monoid representation of the common
/// actor on it, and every reduced polymorphism g₂ into it: g₂ factors
/// through the result, and exactly one map h satisfies h ∘ g₁ = g₂ with
/// (id, h) a morphism (checked by brute force over all maps).
UniversalReport verify_universal_property(const TensorResult& result, std::span<const Representation> reps,
                                          std::size_t target_size_bound,
                                          std::size_t budget = term_budget());
UniversalReport verify_universal_property(const TensorResult& result, std::span<const Representation> reps,
                                          std::span<const FiniteAlgebra> targets,
                                          std::size_t budget = term_budget());

}  // namespace omegarep
