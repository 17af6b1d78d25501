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

namespace omegarep {

/// The equation families a polymorphism (r, R) of f₁…fₙ into f must satisfy.
///
///   Omega1        for each slot k and frozen other actor slots, the section
///                 a ↦ r(…, a, …) preserves every Ω₁ op of positive arity.
///   Omega2        for each slot k and frozen other carrier slots, the
///                 section m ↦ R(…, m, …) is an Ω₂-homomorphism.
///   Action        R(f₁(a₁)m₁, …, fₙ(aₙ)mₙ) = f(r(a₁…aₙ))(R(m₁…mₙ)).
///   ReducedAction R(…, f_k(a)m_k, …) = f(a)(R(…, m_k, …)) for each slot k.
enum class Family { Omega1, Omega2, Action, ReducedAction };

std::string_view to_string(Family family);

/// A counterexample. Fields not meaningful for the family are left empty:
/// `slot` for Action, `op`/`args` for the action families, and the entry of
/// `actors`/`elements` at `slot` is a placeholder for the section families.
struct SlotWitness {
  Family family;
  std::optional<std::size_t> slot;
  Tuple actors;
  Tuple elements;
  std::string op;
  Tuple args;

  std::string describe() const;
};

struct FamilyResult {
  bool ok = true;
  std::optional<SlotWitness> witness;
  std::size_t checked = 0;
};

struct SlotwiseReport {
  /// True when no r was given: the action family is then ReducedAction and
  /// omega1 is absent.
  bool reduced_form = false;
  FamilyResult action;
  std::optional<FamilyResult> omega1;
  FamilyResult omega2;

  bool all_pass() const noexcept {
    return action.ok && omega2.ok && (!omega1 || omega1->ok);
  }
};

struct PolyCheck {
  bool ok = true;
  std::optional<SlotWitness> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// Itemized check of the three families. With `r` absent the reduced
/// equations are checked instead (and all actors must equal the target's).
SlotwiseReport check_slotwise_equations(const std::optional<MultiMap>& r, const MultiMap& R,
                                        std::span<const Representation> reps,
                                        const Representation& target);

/// True iff every family passes; the witness comes from the first failing
/// family in the order Omega1, Omega2, Action.
PolyCheck is_polymorphism(const MultiMap& r, const MultiMap& R, std::span<const Representation> reps,
                          const Representation& target);

/// Each slot section of R, with the identity on actors, is a morphism
/// f_k -> f. Throws ActorMismatch unless every rep shares the target's actor.
PolyCheck is_reduced_polymorphism(const MultiMap& R, std::span<const Representation> reps,
                                  const Representation& target);

/// The element acting as the identity transformation. In monoid mode this
/// is the unit (MonoidUnitMismatch if the unit does not act identically);
/// in tabular mode the least such element.
std::optional<Element> identity_element(const Representation& rep);

struct BridgeReport {
  /// (a) least e acting as the identity in every rep and in the target.
  std::optional<Element> identity;
  /// (b) r(e, …, a, …, e) = a; witness is (slot, a).
  bool evaluated = false;
  bool unit_slots_ok = false;
  std::optional<std::pair<std::size_t, Element>> unit_slots_witness;
  /// (c) with aᵢ = e for i ≠ k both sides of the Action equation coincide
  /// with the ReducedAction equation.
  bool specialization_ok = false;
  std::optional<SlotWitness> specialization_witness;

  bool polymorphism = false;
  bool reduced = false;

  bool all_pass() const noexcept { return identity && unit_slots_ok && specialization_ok; }
  /// If the conditions hold and (r, R) is a polymorphism, then R is reduced.
  bool implication_holds() const noexcept { return !(all_pass() && polymorphism) || reduced; }
};

/// Throws ActorMismatch unless all reps and the target share one actor.
BridgeReport check_bridge(const MultiMap& r, const MultiMap& R, std::span<const Representation> reps,
                          const Representation& target);

struct CommutationWitness {
  std::size_t slot_k, slot_l;
  Element a, b;
  Tuple elements;
};

struct CommutationCheck {
  bool ok = true;
  std::optional<CommutationWitness> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// For k ≠ l, actors a, b and every tuple m: acting with a in slot k and b
/// in slot l gives the same value as f(a)(f(b)(R m)) and as f(b)(f(a)(R m)).
/// Throws NotAReducedPolymorphism if R is not one.
CommutationCheck check_action_commutation(const MultiMap& R, std::span<const Representation> reps,
                                          const Representation& target);

}  // namespace omegarep
