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

#include "omegarep/fixtures.hpp"
#include "omegarep/representation.hpp"
#include "omegarep/signature.hpp"
#include "omegarep/term.hpp"

using namespace omegarep;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::NameNotFound;
}

}  // namespace

TEST_CASE("signature construction") {
  const Signature g = make_signature(SignatureKind::Omega2, {{"add", 2}, {"neg", 1}, {"zero", 0}});
  CHECK(g.size() == 3);
  CHECK(g.kind() == SignatureKind::Omega2);
  CHECK(g.index_of("neg") == 1);
  CHECK(g.op(2).arity == 0);
  CHECK_FALSE(g.find("mul"));

  const Signature m = make_signature(SignatureKind::Omega1, {{"mul", 2}, {"one", 0}});
  CHECK(m.kind() == SignatureKind::Omega1);
  CHECK(m == fixtures::monoid_signature());

  CHECK(kind_of([] { make_signature(SignatureKind::Omega2, {{"add", 2}, {"add", 1}}); }) ==
        ErrorKind::DuplicateOpName);
  CHECK(kind_of([] { make_signature(SignatureKind::Omega2, {{"f", -1}}); }) == ErrorKind::NegativeArity);
  CHECK(kind_of([&] { g.index_of("mul"); }) == ErrorKind::UnknownOp);
  CHECK(to_string(SignatureKind::Omega1) == "omega1");
}

TEST_CASE("term evaluation") {
  const FiniteAlgebra z4 = fixtures::cyclic_group(4);
  const Signature& sig = z4.signature();
  const Tuple none;
  CHECK(eval_term(z4, Term::apply(sig, "zero", {}), none) == 0);

  const Term g0 = Term::generator(0);
  const Term t = Term::apply(sig, "neg", {Term::apply(sig, "add", {g0, g0})});
  const Tuple gens{1};
  CHECK(eval_term(z4, t, gens) == 2);

  const Representation scal2 = fixtures::scalar_representation(2);
  CHECK(eval_term(scal2.carrier(), Term::act(0, g0), gens, &scal2) == 0);
  CHECK(eval_term(scal2.carrier(), Term::act(1, g0), gens, &scal2) == 1);

  CHECK(kind_of([&] { eval_term(z4, Term::generator(3), gens); }) == ErrorKind::GeneratorOutOfRange);
  CHECK(kind_of([&] { eval_term(z4, Term::act(0, g0), gens); }) == ErrorKind::ActWithoutRepresentation);
  CHECK(kind_of([&] { Term::apply(sig, "add", {g0}); }) == ErrorKind::UnknownOp);
  CHECK(kind_of([&] { Term::apply(sig, "mul", {g0, g0}); }) == ErrorKind::UnknownOp);
}

TEST_CASE("term text round trip") {
  const Signature sig = fixtures::group_signature();
  const Term g0 = Term::generator(0), g1 = Term::generator(1);
  const Term t = Term::apply(sig, "add", {Term::act(1, g0), Term::apply(sig, "neg", {g1})});
  CHECK(to_string(t) == "add(@1(g0),neg(g1))");
  CHECK(parse_term(to_string(t), sig) == t);
  CHECK(parse_term(" zero ( ) ", sig) == Term::apply(sig, "zero", {}));
  CHECK(kind_of([&] { parse_term("add(g0,", sig); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_term("mul(g0,g1)", sig); }) == ErrorKind::UnknownOp);
  try {
    parse_term("add(g0 g1)", sig);
  } catch (const omegarep::ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 8);
  }
}

TEST_CASE("term order") {
  const Signature sig = fixtures::group_signature();
  const Term g0 = Term::generator(0), g1 = Term::generator(1);
  const Term zero = Term::apply(sig, "zero", {});
  CHECK(g0 < g1);
  CHECK(g1 < zero);
  CHECK(zero < Term::apply(sig, "neg", {g0}));
  CHECK(Term::apply(sig, "add", {g0, g1}) < Term::apply(sig, "add", {g1, g0}));
  CHECK(Term::apply(sig, "add", {g0, g1}) < Term::act(0, g0));
  CHECK(Term::apply(sig, "add", {g0, g1}) == Term::apply(sig, "add", {g0, g1}));
  CHECK(TermHash{}(Term::apply(sig, "neg", {g0})) == TermHash{}(Term::apply(sig, "neg", {g0})));
}

TEST_CASE("term enumeration") {
  const Signature sig = fixtures::group_signature();
  const auto d0 = enumerate_terms(sig, 1, 0, 0);
  REQUIRE(d0.size() == 2);
  CHECK(d0[0] == Term::generator(0));
  CHECK(d0[1] == Term::apply(sig, "zero", {}));
  CHECK(enumerate_terms(sig, 1, 0, 1).size() == 8);

  const Signature unary = make_signature(SignatureKind::Omega2, {{"f", 1}});
  CHECK(enumerate_terms(unary, 0, 0, 0).empty());
  CHECK(enumerate_terms(unary, 0, 0, 3).empty());

  CHECK(kind_of([&] { enumerate_terms(sig, 2, 2, 3, 100); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("enumeration is nested and every term evaluates") {
  const Signature sig = fixtures::group_signature();
  const FiniteAlgebra z3 = fixtures::cyclic_group(3);
  const Representation rep = fixtures::ring_representation(3);
  for (std::size_t d = 0; d < 2; ++d) {
    const auto small = enumerate_terms(sig, 2, 3, d);
    const auto big = enumerate_terms(sig, 2, 3, d + 1);
    REQUIRE(small.size() <= big.size());
    CHECK(std::equal(small.begin(), small.end(), big.begin()));
    CHECK(std::is_sorted(big.begin(), big.end()));
    const Tuple gens{1, 2};
    for (const auto& t : big) {
      const Element v = eval_term(z3, t, gens, &rep);
      CHECK(v < 3);
      CHECK(eval_term(z3, t, gens, &rep) == v);
    }
  }
}
