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

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "omegarep/fixtures.hpp"
#include "omegarep/polymorphism.hpp"
#include "omegarep/tensor.hpp"
#include "oracles.hpp"

using namespace omegarep;
using namespace omegarep::fixtures;

namespace {

constexpr double kOracleSeconds = 10.0;
constexpr double kUniversalSeconds = 60.0;
constexpr std::size_t kUniversalBound = 3;
constexpr std::size_t kQuotientFixtures = 200;
constexpr std::size_t kMaxCarrier = 6;
constexpr std::size_t kMinimalityMaxSize = 5;
constexpr std::size_t kPartitionsOfFive = 52;
constexpr std::size_t kReducedSamples = 100;
constexpr unsigned kSeed = 20260415;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<Representation> scal_pair(std::size_t m, std::size_t n) {
  return {scalar_representation(m), scalar_representation(n)};
}

Outcome oracle_sizes() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0, mismatches = 0;
  std::string first;
  for (std::size_t m : {2, 3, 4}) {
    for (std::size_t n : {2, 3, 4}) {
      const TensorResult t = tensor_product(scal_pair(m, n));
      const std::size_t expected = oracle::tensor_order({{m}, {n}});
      ++checked;
      if (!t.complete() || t.quotient->size() != expected) {
        ++mismatches;
        if (first.empty()) first = fmt(" first Z%zu(x)Z%zu", m, n);
      }
    }
  }
  const double s = seconds_since(t0);
  return {mismatches == 0 && s < kOracleSeconds,
          fmt("%zu pairs, %zu mismatches, %.3f s (limit %.0f s)", checked, mismatches, s, kOracleSeconds) + first};
}

Outcome universal_property() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t counterexamples = 0, reduced = 0, unique = 0;
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}}) {
    const auto reps = scal_pair(m, n);
    const TensorResult t = tensor_product(reps);
    if (!t.complete()) return {false, "tensor product truncated"};
    const UniversalReport u = verify_universal_property(t, reps, kUniversalBound);
    counterexamples += u.counterexamples.size();
    reduced += u.reduced_polymorphisms;
    unique += u.unique;
  }
  const double s = seconds_since(t0);
  return {counterexamples == 0 && unique == reduced && reduced > 0 && s < kUniversalSeconds,
          fmt("bound %zu, %zu reduced polymorphisms, %zu unique, %zu counterexamples, %.3f s (limit %.0f s)",
              kUniversalBound, reduced, unique, counterexamples, s, kUniversalSeconds)};
}

// Both relation families, checked straight from the tables.
Outcome relations_pointwise() {
  const std::vector<std::size_t> klein_orders{2, 2};
  const Representation klein(scalar_monoid(), abelian_group(klein_orders),
                             {Mapping::constant(4, 4, 0), Mapping::identity(4)}, MonoidOps{"mul", "one"});
  std::vector<std::vector<Representation>> suite;
  for (std::size_t m : {2, 3, 4}) {
    for (std::size_t n : {2, 3, 4}) suite.push_back(scal_pair(m, n));
  }
  suite.push_back(std::vector<Representation>(3, scalar_representation(2)));
  suite.push_back(std::vector<Representation>(2, ring_representation(3)));
  suite.push_back(std::vector<Representation>(2, ring_representation(4)));
  suite.push_back({klein, scalar_representation(4)});

  std::size_t results = 0, checks = 0, failures = 0;
  for (const auto& reps : suite) {
    const TensorResult t = tensor_product(reps);
    if (!t.complete()) continue;
    ++results;
    const FiniteAlgebra& q = *t.quotient;
    const std::size_t n = reps.size();
    std::vector<std::size_t> sizes;
    for (const auto& r : reps) sizes.push_back(r.carrier().size());
    Tuple tuple(n, 0);
    do {
      for (std::size_t k = 0; k < n; ++k) {
        const FiniteAlgebra& b = reps[k].carrier();
        for (std::size_t op = 0; op < b.signature().size(); ++op) {
          const std::size_t p = b.signature().op(op).arity;
          Tuple args(p, 0);
          do {
            Tuple images(p);
            for (std::size_t i = 0; i < p; ++i) {
              Tuple u = tuple;
              u[k] = args[i];
              images[i] = tensor_element(t, u);
            }
            Tuple u = tuple;
            u[k] = b.apply(op, args);
            ++checks;
            if (tensor_element(t, u) != q.apply(op, images)) ++failures;
          } while (next_tuple(args, b.size()));
        }
        for (Element c = 0; c < reps[k].actor().size(); ++c) {
          Tuple u = tuple;
          u[k] = reps[k].action(c)(tuple[k]);
          ++checks;
          if (tensor_element(t, u) != t.induced->action(c)(tensor_element(t, tuple))) ++failures;
        }
      }
    } while (next_tuple(tuple, sizes));
    if (!is_reduced_polymorphism(t.gen_map, reps, *t.induced)) ++failures;
  }
  return {failures == 0 && results == suite.size(),
          fmt("%zu results, %zu pointwise checks, %zu failures", results, checks, failures)};
}

struct QuotientFixture {
  Representation rep;
  Congruence cong;
};

std::vector<QuotientFixture> quotient_fixtures(std::mt19937& rng) {
  std::vector<QuotientFixture> out;
  std::uniform_int_distribution<std::size_t> count(0, 2);
  while (out.size() < kQuotientFixtures) {
    const FiniteAlgebra alg = oracle::random_carrier(rng);
    if (alg.size() > kMaxCarrier) continue;
    Representation rep = oracle::random_representation(rng, alg);
    Congruence cong = congruence_closure(alg, oracle::random_pairs(rng, alg.size(), count(rng)), rep.actions());
    out.push_back({std::move(rep), std::move(cong)});
  }
  return out;
}

Outcome quotient_theorem(const std::vector<QuotientFixture>& fixtures) {
  std::size_t failures = 0, nontrivial = 0;
  for (const auto& [rep, cong] : fixtures) {
    const QuotientRepresentation q = quotient_representation(rep, cong);
    const Mapping& j = q.projection.R;
    if (cong.class_count() < rep.carrier().size()) ++nontrivial;
    bool ok = static_cast<bool>(is_morphism(q.projection, rep, q.rep)) && q.projection.r.is_identity() &&
              validate_representation(q.rep).ok();
    for (Element a = 0; a < rep.actor().size(); ++a) {
      for (Element x = 0; x < rep.carrier().size(); ++x) ok = ok && q.rep.action(a)(j(x)) == j(rep.action(a)(x));
    }
    if (!ok) ++failures;
  }
  return {failures == 0, fmt("%zu fixtures (%zu with a proper congruence), %zu failures", fixtures.size(), nontrivial, failures)};
}

Outcome nat_universality(const std::vector<QuotientFixture>& fixtures, std::mt19937& rng) {
  std::size_t morphisms = 0, failures = 0;
  for (const auto& [rep, cong] : fixtures) {
    const QuotientRepresentation q = quotient_representation(rep, cong);
    // Targets whose kernel contains the congruence: the quotient itself and
    // the quotient by a coarser congruence.
    std::vector<std::pair<RepMorphism, Representation>> targets{{q.projection, q.rep}};
    std::vector<ElementPair> seed;
    for (const auto& cls : cong.classes()) {
      for (Element x : cls) seed.emplace_back(cls.front(), x);
    }
    for (const auto& p : oracle::random_pairs(rng, rep.carrier().size(), 1)) seed.push_back(p);
    const Congruence coarser = congruence_closure(rep.carrier(), seed, rep.actions());
    const QuotientRepresentation c = quotient_representation(rep, coarser);
    targets.emplace_back(c.projection, c.rep);

    for (const auto& [m, dst] : targets) {
      ++morphisms;
      const RepMorphism h = factor_morphism_through_quotient(m, rep, dst, cong);
      bool ok = compose(h.R, q.projection.R) == m.R && is_morphism(h, q.rep, dst);
      std::size_t solutions = 0;
      for (const auto& v : oracle::all_maps(q.rep.carrier().size(), dst.carrier().size())) {
        bool triangle = true;
        for (Element x = 0; x < rep.carrier().size() && triangle; ++x) triangle = v[q.projection.R(x)] == m.R(x);
        if (!triangle) continue;
        const RepMorphism cand{m.r, Mapping(v.size(), dst.carrier().size(), v)};
        if (is_morphism(cand, q.rep, dst)) {
          ++solutions;
          ok = ok && cand == h;
        }
      }
      if (!ok || solutions != 1) ++failures;
    }
  }
  return {failures == 0, fmt("%zu fixtures, %zu morphisms factored, %zu failures", fixtures.size(), morphisms, failures)};
}

Outcome minimality(std::mt19937& rng) {
  if (oracle::all_partitions(5).size() != kPartitionsOfFive) return {false, "partition enumeration is wrong"};
  std::size_t cases = 0, mismatches = 0;
  std::uniform_int_distribution<std::size_t> count(0, 3);
  for (std::size_t round = 0; round < 400; ++round) {
    const FiniteAlgebra alg = oracle::random_carrier(rng);
    if (alg.size() > kMinimalityMaxSize) continue;
    const Representation rep = oracle::random_representation(rng, alg);
    const auto pairs = oracle::random_pairs(rng, alg.size(), count(rng));
    const std::vector<Mapping> maps = round % 2 ? rep.actions() : std::vector<Mapping>{};
    ++cases;
    if (congruence_closure(alg, pairs, maps).representatives() != oracle::least_congruence(alg, pairs, maps)) {
      ++mismatches;
    }
  }
  return {mismatches == 0 && cases > 0, fmt("%zu cases with n <= %zu, %zu mismatches", cases, kMinimalityMaxSize, mismatches)};
}

Outcome commutation(std::mt19937& rng) {
  std::size_t reduced = 0, violations = 0;
  auto check = [&](const MultiMap& R, const std::vector<Representation>& reps, const Representation& target) {
    if (!is_reduced_polymorphism(R, reps, target)) return false;
    ++reduced;
    if (!check_action_commutation(R, reps, target)) ++violations;
    return true;
  };

  // Hand fixtures.
  for (std::size_t m = 2; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      check(multiplication_map(m, n), std::vector<Representation>(n, ring_representation(m)), ring_representation(m));
      check(multiplication_map(m, n), std::vector<Representation>(n, scalar_representation(m)), scalar_representation(m));
    }
  }

  // h ∘ g₁ for random morphisms h out of small tensor results.
  const auto targets = target_library(group_signature(), 4);
  std::size_t from_factoring = 0, attempts = 0;
  std::uniform_int_distribution<std::size_t> side(2, 4);
  while (from_factoring < kReducedSamples && attempts++ < 100 * kReducedSamples) {
    const auto reps = scal_pair(side(rng), side(rng));
    const TensorResult t = tensor_product(reps);
    const FiniteAlgebra& v = targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
    const auto vreps = monoid_representations(scalar_monoid(), MonoidOps{"mul", "one"}, v);
    const Representation& target = vreps[std::uniform_int_distribution<std::size_t>(0, vreps.size() - 1)(rng)];
    std::vector<Mapping> morphs;
    for (const auto& h : homomorphisms(*t.quotient, v)) {
      if (is_morphism({Mapping::identity(2), h}, *t.induced, target)) morphs.push_back(h);
    }
    if (morphs.empty()) continue;
    const Mapping& h = morphs[std::uniform_int_distribution<std::size_t>(0, morphs.size() - 1)(rng)];
    if (check(compose(h, t.gen_map), reps, target)) {
      ++from_factoring;
    } else {
      ++violations;
    }
  }
  return {violations == 0 && from_factoring >= kReducedSamples,
          fmt("%zu reduced polymorphisms (%zu via factoring), %zu violations", reduced, from_factoring, violations)};
}

Outcome bridge(std::mt19937& rng) {
  std::size_t premises = 0, violations = 0, fixtures_seen = 0;
  auto run = [&](const MultiMap& r, const MultiMap& R, const std::vector<Representation>& reps, const Representation& target) {
    ++fixtures_seen;
    const BridgeReport b = check_bridge(r, R, reps, target);
    if (b.all_pass() && b.polymorphism) ++premises;
    if (!b.implication_holds()) ++violations;
  };

  // Exhaustive over scal2 with two slots.
  const Representation scal2 = scalar_representation(2);
  const std::vector<std::size_t> two{2, 2};
  for (const auto& rv : oracle::all_maps(4, 2)) {
    for (const auto& Rv : oracle::all_maps(4, 2)) run(MultiMap(two, 2, rv), MultiMap(two, 2, Rv), {scal2, scal2}, scal2);
  }
  // Multiplication of every arity over Z/m.
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& rep : {scalar_representation(m), ring_representation(m)}) {
        const std::vector<Representation> reps(n, rep);
        run(monoid_product_map(rep, n), multiplication_map(m, n), reps, rep);
      }
    }
  }
  // Every carrier map over Z3 paired with the monoid product on the actor.
  for (const auto& rep : {scalar_representation(3), ring_representation(3)}) {
    const MultiMap r = monoid_product_map(rep, 2);
    const std::vector<std::size_t> carriers{3, 3};
    for (const auto& Rv : oracle::all_maps(9, 3)) run(r, MultiMap(carriers, 3, Rv), {rep, rep}, rep);
  }
  // Random samples over larger carriers and actors.
  for (std::size_t m : {3, 4}) {
    for (const auto& rep : {scalar_representation(m), ring_representation(m)}) {
      const std::size_t a = rep.actor().size();
      const std::vector<std::size_t> actors{a, a}, carriers{m, m};
      std::uniform_int_distribution<Element> act(0, static_cast<Element>(a - 1)), val(0, static_cast<Element>(m - 1));
      const MultiMap r = monoid_product_map(rep, 2);
      for (int i = 0; i < 200; ++i) {
        std::vector<Element> rv(a * a), Rv(m * m);
        for (auto& x : rv) x = act(rng);
        for (auto& x : Rv) x = val(rng);
        run(i % 2 ? r : MultiMap(actors, a, rv), MultiMap(carriers, m, Rv), {rep, rep}, rep);
      }
      run(r, multiplication_map(m, 2), {rep, rep}, rep);
    }
  }
  return {violations == 0 && premises > 0,
          fmt("%zu fixtures, %zu satisfy the premise, %zu violations", fixtures_seen, premises, violations)};
}

}  // namespace

int main() {
  std::mt19937 rng(kSeed);
  const auto quotients = quotient_fixtures(rng);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"tensor sizes equal the Smith normal form oracle", oracle_sizes},
      {"universal property of Z2(x)Z2 and Z2(x)Z3", universal_property},
      {"generator relations hold pointwise", relations_pointwise},
      {"quotient representation and projection morphism", [&] { return quotient_theorem(quotients); }},
      {"projection is universal among morphisms killing the congruence", [&] { return nat_universality(quotients, rng); }},
      {"closure equals the least compatible partition", [&] { return minimality(rng); }},
      {"reduced polymorphisms make actions commute", [&] { return commutation(rng); }},
      {"bridge conditions imply the reduced form", [&] { return bridge(rng); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
