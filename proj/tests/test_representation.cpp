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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "omegarep/fixtures.hpp"
#include "omegarep/representation.hpp"
#include "oracles.hpp"

using namespace omegarep;

namespace {

Mapping mod(std::size_t from, std::size_t to) {
  std::vector<Element> v(from);
  for (std::size_t x = 0; x < from; ++x) v[x] = static_cast<Element>(x % to);
  return Mapping(from, to, v);
}

const Congruence& evens_odds() {
  static const Congruence c = Congruence::from_classes(4, {{0, 2}, {1, 3}});
  return c;
}

// Z/4 with a single successor op, acted on by {0,1} with 1 as translation.
Representation translation_rep() {
  const Signature sig(SignatureKind::Omega2, {{"succ", 1}});
  const FiniteAlgebra carrier(sig, 4, {{1, 2, 3, 0}});
  const Signature actor_sig(SignatureKind::Omega1, {{"op", 2}});
  const FiniteAlgebra actor(actor_sig, 2, {{0, 1, 1, 0}});
  return Representation(actor, carrier, {Mapping::identity(4), Mapping(4, 4, {1, 2, 3, 0})});
}

}  // namespace

TEST_CASE("construction errors") {
  const FiniteAlgebra z2 = fixtures::cyclic_group(2);
  const FiniteAlgebra m2 = fixtures::scalar_monoid();
  CHECK_THROWS_AS(Representation(z2, z2, {Mapping::identity(2), Mapping::identity(2)}), Error);
  CHECK_THROWS_AS(Representation(m2, z2, {Mapping::identity(2)}), Error);
  CHECK_THROWS_AS(Representation(m2, z2, {Mapping::identity(3), Mapping::identity(3)}), Error);
  CHECK_THROWS_AS(Representation(m2, z2, {Mapping::identity(2), Mapping::identity(2)}, MonoidOps{"one", "mul"}), Error);
  const Representation tab = fixtures::trivial_representation(m2, z2);
  CHECK_FALSE(tab.is_monoid());
  CHECK_THROWS_AS(tab.unit(), Error);
  const Representation scal2 = fixtures::scalar_representation(2);
  CHECK(scal2.unit() == 1);
  CHECK(scal2.mul(1, 0) == 0);
}

TEST_CASE("validate_representation") {
  CHECK(validate_representation(fixtures::scalar_representation(2)).ok());
  CHECK(validate_representation(fixtures::trivial_representation(fixtures::scalar_monoid(), fixtures::cyclic_group(3))).ok());
  CHECK(validate_representation(fixtures::ring_representation(5)).ok());

  const Representation bad(fixtures::scalar_monoid(), fixtures::cyclic_group(3),
                           {Mapping::constant(3, 3, 0), Mapping::constant(3, 3, 1)});
  const auto report = validate_representation(bad);
  REQUIRE_FALSE(report.ok());
  const RepViolation& v = report.violations.front();
  CHECK(v.kind == RepViolation::Kind::NotEndomorphism);
  CHECK(v.a == 1);
  REQUIRE(v.op);
  CHECK(v.op->op == "add");
  CHECK(v.op->args == Tuple{0, 0});

  // Endomorphisms, but 1·1 = 1 while f(1)∘f(1) = f(0).
  const Representation law(fixtures::scalar_monoid(), fixtures::cyclic_group(2),
                           {Mapping::identity(2), Mapping::constant(2, 2, 0)}, MonoidOps{"mul", "one"});
  const auto r2 = validate_representation(law);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.violations.front().kind == RepViolation::Kind::MonoidLaw);
}

TEST_CASE("actions are endomorphisms") {
  std::mt19937 rng(21);
  for (int round = 0; round < 20; ++round) {
    const FiniteAlgebra alg = oracle::random_carrier(rng);
    const Representation rep = oracle::random_representation(rng, alg);
    CHECK(validate_representation(rep).ok());
    const auto endos = endomorphisms(alg);
    for (const auto& h : rep.actions()) CHECK(std::find(endos.begin(), endos.end(), h) != endos.end());
  }
}

TEST_CASE("is_morphism") {
  const Representation scal2 = fixtures::scalar_representation(2);
  const Representation scal4 = fixtures::scalar_representation(4);
  CHECK(is_morphism(identity_morphism(scal2), scal2, scal2));
  CHECK(is_morphism({Mapping::identity(2), mod(4, 2)}, scal4, scal2));

  const MorphismCheck c = is_morphism({Mapping::identity(2), Mapping::constant(2, 2, 1)}, scal2, scal2);
  CHECK_FALSE(c);
  REQUIRE(c.witness);
  CHECK(c.witness->clause == MorphismWitness::Clause::CarrierHom);
  CHECK(c.witness->op->op == "add");
  CHECK(c.witness->op->args == Tuple{0, 0});

  // Translation does not commute with scaling by 0.
  const Representation t = translation_rep();
  const MorphismCheck i = is_morphism({Mapping::identity(2), Mapping(4, 4, {1, 2, 3, 0})}, t, t);
  CHECK(i);
  const MorphismCheck s = is_morphism({Mapping::identity(2), Mapping::constant(4, 4, 0)}, t, t);
  CHECK_FALSE(s);
  CHECK(s.witness->clause == MorphismWitness::Clause::CarrierHom);
}

TEST_CASE("morphisms compose") {
  const Representation scal2 = fixtures::scalar_representation(2);
  const Representation scal4 = fixtures::scalar_representation(4);
  const Representation scal8 = fixtures::scalar_representation(8);
  const RepMorphism first{Mapping::identity(2), mod(8, 4)};
  const RepMorphism second{Mapping::identity(2), mod(4, 2)};
  REQUIRE(is_morphism(first, scal8, scal4));
  REQUIRE(is_morphism(second, scal4, scal2));
  CHECK(is_morphism(compose(second, first), scal8, scal2));
  CHECK(compose(second, first).R == mod(8, 2));

  std::mt19937 rng(2);
  for (int round = 0; round < 30; ++round) {
    const FiniteAlgebra alg = oracle::random_carrier(rng);
    const Representation f = oracle::random_representation(rng, alg);
    const auto endos = endomorphisms(alg);
    std::vector<RepMorphism> morphs;
    for (const auto& h : endos) {
      RepMorphism m{Mapping::identity(f.actor().size()), h};
      if (is_morphism(m, f, f)) morphs.push_back(m);
    }
    CHECK_FALSE(morphs.empty());
    for (const auto& a : morphs) {
      for (const auto& b : morphs) CHECK(is_morphism(compose(b, a), f, f));
    }
  }
}

TEST_CASE("quotient representations") {
  const Representation scal4 = fixtures::scalar_representation(4);
  const QuotientRepresentation q = quotient_representation(scal4, evens_odds());
  CHECK(q.rep == fixtures::scalar_representation(2));
  CHECK(q.projection.R == mod(4, 2));
  CHECK(is_morphism(q.projection, scal4, q.rep));

  const QuotientRepresentation same = quotient_representation(scal4, Congruence(4));
  CHECK(same.rep == scal4);
  CHECK(same.projection.R.is_identity());

  const QuotientRepresentation swap = quotient_representation(translation_rep(), evens_odds());
  CHECK(swap.rep.carrier().size() == 2);
  CHECK(swap.rep.action(1) == Mapping(2, 2, {1, 0}));
  CHECK(swap.rep.action(0).is_identity());

  const Congruence halves = Congruence::from_classes(4, {{0, 1}, {2, 3}});
  const Representation ring4 = fixtures::ring_representation(4);
  // Multiplication by 2 sends 0 ~ 1 to 0 and 2, which are apart.
  CHECK_THROWS_AS(quotient_representation(ring4, halves), omegarep::NotCoordinated);
}

TEST_CASE("factor morphisms through a quotient") {
  const Representation scal4 = fixtures::scalar_representation(4);
  const Representation scal2 = fixtures::scalar_representation(2);
  const QuotientRepresentation q = quotient_representation(scal4, evens_odds());

  const RepMorphism own = factor_morphism_through_quotient(q.projection, scal4, q.rep, evens_odds());
  CHECK(own.R.is_identity());

  const RepMorphism h = factor_morphism_through_quotient({Mapping::identity(2), mod(4, 2)}, scal4, scal2, evens_odds());
  CHECK(h.R == Mapping(2, 2, {0, 1}));
  CHECK(is_morphism(h, q.rep, scal2));

  try {
    factor_morphism_through_quotient(identity_morphism(scal4), scal4, scal4, evens_odds());
    FAIL("expected KernelTooSmall");
  } catch (const omegarep::KernelTooSmall& e) {
    CHECK(e.x == 0);
    CHECK(e.y == 2);
  }
  const RepMorphism junk{Mapping::identity(2), Mapping::constant(4, 2, 1)};
  CHECK_THROWS_AS(factor_morphism_through_quotient(junk, scal4, scal2, evens_odds()), Error);
}

TEST_CASE("monoid representations of the scalar monoid") {
  const auto reps = fixtures::monoid_representations(fixtures::scalar_monoid(), MonoidOps{"mul", "one"},
                                                     fixtures::cyclic_group(3));
  // f(1) = id; f(0) is an idempotent endomorphism: 0 or id.
  REQUIRE(reps.size() == 2);
  for (const auto& r : reps) CHECK(validate_representation(r).ok());
  CHECK(reps[0] == fixtures::scalar_representation(3));
}
