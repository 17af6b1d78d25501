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
#include <vector>

#include "omegarep/algebra.hpp"
#include "omegarep/congruence.hpp"

namespace omegarep {

/// Names of the multiplication and unit of a monoid-like actor.
struct MonoidOps {
  std::string mul;
  std::string unit;
  friend bool operator==(const MonoidOps&, const MonoidOps&) = default;
};

/// An Ω₁-algebra acting on an Ω₂-algebra: each actor element a carries a
/// self-map action(a) of the carrier.
///
/// In tabular mode the action is just a table. In monoid mode the actor's
/// `mul` and `unit` ops are additionally expected to satisfy
/// action(mul(a,b)) = action(a) ∘ action(b) and action(unit) = identity;
/// validate_representation checks both laws.
class Representation {
 public:
  Representation() = default;
  /// Throws SignatureMismatch for wrongly tagged signatures,
  /// DimensionMismatch for action tables of the wrong shape, and UnknownOp
  /// when the monoid ops are missing or have the wrong arity.
  Representation(FiniteAlgebra actor, FiniteAlgebra carrier, std::vector<Mapping> action,
                 std::optional<MonoidOps> monoid = std::nullopt);

  const FiniteAlgebra& actor() const noexcept { return actor_; }
  const FiniteAlgebra& carrier() const noexcept { return carrier_; }
  const Mapping& action(Element a) const { return action_.at(a); }
  const std::vector<Mapping>& actions() const noexcept { return action_; }

  bool is_monoid() const noexcept { return monoid_.has_value(); }
  const std::optional<MonoidOps>& monoid() const noexcept { return monoid_; }
  /// Monoid mode only.
  Element unit() const;
  Element mul(Element a, Element b) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  FiniteAlgebra actor_;
  FiniteAlgebra carrier_;
  std::vector<Mapping> action_;
  std::optional<MonoidOps> monoid_;
};

/// A pair (r, R): r between actors, R between carriers.
struct RepMorphism {
  Mapping r;
  Mapping R;
  friend bool operator==(const RepMorphism&, const RepMorphism&) = default;
};

struct RepViolation {
  enum class Kind { NotEndomorphism, MonoidLaw, UnitNotIdentity };
  Kind kind;
  Element a = 0;
  Element b = 0;
  std::optional<OpWitness> op;
};

struct RepresentationReport {
  std::vector<RepViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

RepresentationReport validate_representation(const Representation& rep);

struct MorphismWitness {
  enum class Clause { ActorHom, CarrierHom, Intertwining };
  Clause clause;
  std::optional<OpWitness> op;  // hom clauses
  Element actor = 0;            // intertwining clause
  Element element = 0;
};

struct MorphismCheck {
  bool ok = true;
  std::optional<MorphismWitness> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// Checks the three clauses in order: r is an Ω₁-homomorphism, R is an
/// Ω₂-homomorphism, and R(f_src(a)(m)) = f_dst(r(a))(R(m)) for all a, m.
MorphismCheck is_morphism(const RepMorphism& m, const Representation& src, const Representation& dst);

RepMorphism identity_morphism(const Representation& rep);
/// (r2 ∘ r1, R2 ∘ R1).
RepMorphism compose(const RepMorphism& second, const RepMorphism& first);

struct QuotientRepresentation {
  Representation rep;
  RepMorphism projection;  // (id, nat N)
};

/// Induced action on B/N: f1(a)(j x) = j(f(a) x). Throws NotCoordinated
/// (checked before anything is built) or NotACongruence.
QuotientRepresentation quotient_representation(const Representation& rep, const Congruence& cong);

/// The unique (m.r, h) from rep/cong to `dst` with h ∘ nat(cong) = m.R.
/// Throws KernelTooSmall when some congruent pair is separated by m.R, and
/// NotAMorphism if `m` is not a morphism rep -> dst.
RepMorphism factor_morphism_through_quotient(const RepMorphism& m, const Representation& rep,
                                             const Representation& dst, const Congruence& cong);

}  // namespace omegarep
