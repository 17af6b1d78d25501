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

#include <random>

#include "omegarep/fixtures.hpp"
#include "omegarep/polymorphism.hpp"
#include "oracles.hpp"

using namespace omegarep;
using namespace omegarep::fixtures;

namespace {

std::vector<Representation> copies(const Representation& rep, std::size_t n) { return std::vector<Representation>(n, rep); }

MultiMap unary_identity(std::size_t n) {
  return MultiMap({n}, n, [n] {
    std::vector<Element> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Element>(i);
    return v;
  }());
}

}  // namespace

TEST_CASE("is_polymorphism") {
  const Representation scal2 = scalar_representation(2);
  const auto reps = copies(scal2, 2);
  const MultiMap r = monoid_product_map(scal2, 2);
  CHECK(r == multiplication_map(2, 2));

  const std::vector<Representation> one{scal2};
  CHECK(is_polymorphism(unary_identity(2), unary_identity(2), one, scal2));
  CHECK(is_polymorphism(r, multiplication_map(2, 2), reps, scal2));

  const PolyCheck add = is_polymorphism(r, addition_map(2, 2), reps, scal2);
  CHECK_FALSE(add);
  REQUIRE(add.witness);
  // x ↦ x + 1 already fails to preserve zero.
  CHECK(add.witness->family == Family::Omega2);
}

TEST_CASE("slot-wise families") {
  const Representation scal2 = scalar_representation(2);
  const auto reps = copies(scal2, 2);
  const MultiMap r = multiplication_map(2, 2);

  const SlotwiseReport mm = check_slotwise_equations(r, multiplication_map(2, 2), reps, scal2);
  CHECK(mm.all_pass());
  CHECK_FALSE(mm.reduced_form);
  REQUIRE(mm.omega1);
  CHECK(mm.omega1->ok);

  const SlotwiseReport ma = check_slotwise_equations(r, addition_map(2, 2), reps, scal2);
  CHECK_FALSE(ma.action.ok);
  CHECK_FALSE(ma.omega2.ok);
  CHECK(ma.omega1->ok);
  CHECK_FALSE(ma.all_pass());

  const std::vector<Representation> one{scal2};
  CHECK(check_slotwise_equations(unary_identity(2), unary_identity(2), one, scal2).all_pass());

  const SlotwiseReport reduced = check_slotwise_equations(std::nullopt, multiplication_map(2, 2), reps, scal2);
  CHECK(reduced.reduced_form);
  CHECK_FALSE(reduced.omega1);
  CHECK(reduced.all_pass());
}

TEST_CASE("reduced polymorphisms") {
  const Representation scal2 = scalar_representation(2);
  const auto reps = copies(scal2, 2);
  CHECK(is_reduced_polymorphism(multiplication_map(2, 2), reps, scal2));

  const std::vector<std::size_t> sizes{2, 2};
  const PolyCheck proj = is_reduced_polymorphism(projection_map(sizes, 0), reps, scal2);
  CHECK_FALSE(proj);
  REQUIRE(proj.witness);
  CHECK(proj.witness->family == Family::Omega2);
  CHECK(proj.witness->slot == 1);
  CHECK(proj.witness->elements == Tuple{1, 0});

  for (std::size_t n = 1; n <= 3; ++n) {
    const std::vector<std::size_t> s(n, 3);
    CHECK(is_reduced_polymorphism(constant_map(s, 3, 0), copies(ring_representation(3), n), ring_representation(3)));
  }
  const std::vector<Representation> mismatched{scal2, trivial_representation(multiplicative_monoid(3), cyclic_group(2))};
  CHECK_THROWS_AS(is_reduced_polymorphism(multiplication_map(2, 2), mismatched, scal2), Error);
  CHECK_THROWS_AS(is_reduced_polymorphism(multiplication_map(2, 3), reps, scal2), Error);
}

TEST_CASE("checker agrees with the definition") {
  std::mt19937 rng(17);
  const std::vector<Representation> pool{scalar_representation(2), scalar_representation(3), scalar_representation(4),
                                         ring_representation(2)};
  std::size_t reduced = 0;
  for (int round = 0; round < 400; ++round) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), arity(1, 2);
    const std::size_t n = arity(rng);
    std::vector<Representation> reps;
    for (std::size_t k = 0; k < n; ++k) reps.push_back(pool[pick(rng)]);
    const Representation target = pool[pick(rng)];
    std::vector<std::size_t> sizes;
    for (const auto& rep : reps) sizes.push_back(rep.carrier().size());
    std::uniform_int_distribution<Element> value(0, static_cast<Element>(target.carrier().size() - 1));
    // Bias toward structured maps so that some pass.
    const MultiMap R = MultiMap::from_function(sizes, target.carrier().size(), [&](std::span<const Element> x) {
      std::size_t p = round % 3 == 0 ? 1 : value(rng);
      if (round % 3 == 0) {
        for (Element v : x) p *= v;
      }
      return static_cast<Element>(p % target.carrier().size());
    });
    const bool ours = is_reduced_polymorphism(R, reps, target).ok;
    CHECK(ours == oracle::naive_reduced(R, reps, target));
    if (ours) ++reduced;
  }
  CHECK(reduced > 10);
}

TEST_CASE("is_polymorphism agrees with the itemized families") {
  const Representation scal2 = scalar_representation(2);
  const auto reps = copies(scal2, 2);
  const std::vector<std::size_t> sizes{2, 2};
  for (const auto& rv : oracle::all_maps(4, 2)) {
    const MultiMap r(sizes, 2, rv);
    for (const auto& Rv : oracle::all_maps(4, 2)) {
      const MultiMap R(sizes, 2, Rv);
      CHECK(is_polymorphism(r, R, reps, scal2).ok == check_slotwise_equations(r, R, reps, scal2).all_pass());
    }
  }
}

TEST_CASE("identity element") {
  CHECK(identity_element(scalar_representation(2)) == 1);
  const Representation zeros(scalar_monoid(), cyclic_group(2), {Mapping::constant(2, 2, 0), Mapping::constant(2, 2, 0)});
  CHECK_FALSE(identity_element(zeros));
  CHECK(identity_element(trivial_representation(scalar_monoid(), cyclic_group(3))) == 0);
}

TEST_CASE("bridge conditions") {
  const Representation scal2 = scalar_representation(2);
  const auto reps = copies(scal2, 2);
  const BridgeReport ok = check_bridge(multiplication_map(2, 2), multiplication_map(2, 2), reps, scal2);
  CHECK(ok.identity == 1);
  CHECK(ok.all_pass());
  CHECK(ok.polymorphism);
  CHECK(ok.reduced);
  CHECK(ok.implication_holds());

  const std::vector<std::size_t> sizes{2, 2};
  const BridgeReport zero = check_bridge(constant_map(sizes, 2, 0), multiplication_map(2, 2), reps, scal2);
  CHECK_FALSE(zero.unit_slots_ok);
  REQUIRE(zero.unit_slots_witness);
  CHECK(zero.unit_slots_witness->first == 0);
  CHECK(zero.unit_slots_witness->second == 1);

  const Representation zeros(scalar_monoid(), cyclic_group(2), {Mapping::constant(2, 2, 0), Mapping::constant(2, 2, 0)});
  const BridgeReport none = check_bridge(multiplication_map(2, 2), multiplication_map(2, 2), copies(zeros, 2), zeros);
  CHECK_FALSE(none.identity);
  CHECK_FALSE(none.all_pass());
  CHECK(none.implication_holds());
}

TEST_CASE("actions commute under reduced polymorphisms") {
  const Representation scal2 = scalar_representation(2);
  CHECK(check_action_commutation(multiplication_map(2, 2), copies(scal2, 2), scal2));
  const std::vector<std::size_t> sizes{2, 2};
  CHECK_THROWS_AS(check_action_commutation(projection_map(sizes, 0), copies(scal2, 2), scal2), Error);

  const Representation ring4 = ring_representation(4);
  CHECK(check_action_commutation(multiplication_map(4, 3), copies(ring4, 3), ring4));
}
