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

#include "omegarep/fixtures.hpp"

#include <numeric>

namespace omegarep::fixtures {

Signature group_signature() {
  return Signature(SignatureKind::Omega2, {{"add", 2}, {"neg", 1}, {"zero", 0}});
}

Signature monoid_signature() { return Signature(SignatureKind::Omega1, {{"mul", 2}, {"one", 0}}); }

FiniteAlgebra cyclic_group(std::size_t m) {
  const std::size_t orders[] = {m};
  return abelian_group(orders);
}

FiniteAlgebra abelian_group(std::span<const std::size_t> orders) {
  ProductCodec codec(std::vector<std::size_t>(orders.begin(), orders.end()));
  const std::size_t n = codec.size();
  std::vector<Element> add(n * n), neg(n);
  for (Element x = 0; x < n; ++x) {
    const Tuple tx = codec.decode(x);
    Tuple t(tx.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<Element>((orders[i] - tx[i]) % orders[i]);
    neg[x] = codec.encode(t);
    for (Element y = 0; y < n; ++y) {
      const Tuple ty = codec.decode(y);
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<Element>((tx[i] + ty[i]) % orders[i]);
      add[x * n + y] = codec.encode(t);
    }
  }
  return FiniteAlgebra(group_signature(), n, {std::move(add), std::move(neg), {0}});
}

FiniteAlgebra scalar_monoid() { return multiplicative_monoid(2); }

FiniteAlgebra multiplicative_monoid(std::size_t m) {
  std::vector<Element> mul(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) mul[a * m + b] = static_cast<Element>(a * b % m);
  }
  return FiniteAlgebra(monoid_signature(), m, {std::move(mul), {static_cast<Element>(1 % m)}});
}

namespace {

Representation scaling(FiniteAlgebra actor, std::size_t m) {
  std::vector<Mapping> action;
  for (std::size_t a = 0; a < actor.size(); ++a) {
    std::vector<Element> v(m);
    for (std::size_t x = 0; x < m; ++x) v[x] = static_cast<Element>(a * x % m);
    action.emplace_back(m, m, std::move(v));
  }
  return Representation(std::move(actor), cyclic_group(m), std::move(action), MonoidOps{"mul", "one"});
}

}  // namespace

Representation scalar_representation(std::size_t m) { return scaling(scalar_monoid(), m); }

Representation ring_representation(std::size_t m) { return scaling(multiplicative_monoid(m), m); }

Representation trivial_representation(const FiniteAlgebra& actor, const FiniteAlgebra& carrier) {
  return Representation(actor, carrier,
                        std::vector<Mapping>(actor.size(), Mapping::identity(carrier.size())));
}

MultiMap multiplication_map(std::size_t m, std::size_t n) {
  return MultiMap::from_function(std::vector<std::size_t>(n, m), m, [m](std::span<const Element> x) {
    std::size_t p = 1 % m;
    for (Element v : x) p = p * v % m;
    return static_cast<Element>(p);
  });
}

MultiMap addition_map(std::size_t m, std::size_t n) {
  return MultiMap::from_function(std::vector<std::size_t>(n, m), m, [m](std::span<const Element> x) {
    std::size_t s = 0;
    for (Element v : x) s = (s + v) % m;
    return static_cast<Element>(s);
  });
}

MultiMap projection_map(std::span<const std::size_t> sizes, std::size_t slot) {
  return MultiMap::from_function({sizes.begin(), sizes.end()}, sizes[slot],
                                 [slot](std::span<const Element> x) { return x[slot]; });
}

MultiMap constant_map(std::span<const std::size_t> sizes, std::size_t dst_size, Element value) {
  return MultiMap::from_function({sizes.begin(), sizes.end()}, dst_size,
                                 [value](std::span<const Element>) { return value; });
}

MultiMap monoid_product_map(const Representation& rep, std::size_t n) {
  const Element unit = rep.unit();
  return MultiMap::from_function(std::vector<std::size_t>(n, rep.actor().size()), rep.actor().size(),
                                 [&](std::span<const Element> a) {
                                   Element p = unit;
                                   for (Element x : a) p = rep.mul(p, x);
                                   return p;
                                 });
}

std::optional<Element> find_composite_actor(const Representation& rep, Element a, Element b) {
  const Mapping target = compose(rep.action(a), rep.action(b));
  for (Element c = 0; c < rep.actor().size(); ++c) {
    if (rep.action(c) == target) return c;
  }
  return std::nullopt;
}

std::vector<Representation> monoid_representations(const FiniteAlgebra& actor, const MonoidOps& ops,
                                                   const FiniteAlgebra& carrier, std::size_t budget) {
  const auto endos = endomorphisms(carrier, budget);
  const std::size_t k = actor.size();
  const Element unit = actor.apply(ops.unit, Tuple{});
  const std::size_t mul = actor.signature().index_of(ops.mul);

  std::vector<Representation> out;
  std::vector<std::size_t> choice(k, 0);
  std::size_t nodes = 0;
  // Assign actions in element order; a monoid-law constraint is checked once
  // all three of a, b and a·b have been assigned.
  auto consistent = [&](std::size_t upto) {
    for (std::size_t a = 0; a <= upto; ++a) {
      for (std::size_t b = 0; b <= upto; ++b) {
        const Element ab = actor.apply(mul, Tuple{static_cast<Element>(a), static_cast<Element>(b)});
        if (ab > upto || (a != upto && b != upto && ab != upto)) continue;
        if (endos[choice[ab]] != compose(endos[choice[a]], endos[choice[b]])) return false;
      }
    }
    return upto != unit || endos[choice[unit]].is_identity();
  };
  auto search = [&](auto&& self, std::size_t a) -> void {
    if (a == k) {
      std::vector<Mapping> action;
      for (std::size_t i = 0; i < k; ++i) action.push_back(endos[choice[i]]);
      out.emplace_back(actor, carrier, std::move(action), ops);
      return;
    }
    for (std::size_t e = 0; e < endos.size(); ++e) {
      if (++nodes > budget) {
        throw Error(ErrorKind::BudgetExceeded, "representation search passed the budget");
      }
      choice[a] = e;
      if (consistent(a)) self(self, a + 1);
    }
  };
  search(search, 0);
  return out;
}

}  // namespace omegarep::fixtures
