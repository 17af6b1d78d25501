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
#include <vector>

#include "omegarep/algebra.hpp"
#include "omegarep/multimap.hpp"
#include "omegarep/representation.hpp"

namespace omegarep::fixtures {

/// omega2 {add/2, neg/1, zero/0}.
Signature group_signature();
/// omega1 {mul/2, one/0}.
Signature monoid_signature();

/// Z/m under addition.
FiniteAlgebra cyclic_group(std::size_t m);
/// Z/m₁ × … × Z/m_k, row-major.
FiniteAlgebra abelian_group(std::span<const std::size_t> orders);
/// {0, 1} under multiplication, unit 1.
FiniteAlgebra scalar_monoid();
/// Z/m with multiplication mod m, unit 1 (a monoid of size m).
FiniteAlgebra multiplicative_monoid(std::size_t m);

/// The scalar monoid {0,1} acting on Z/m by a·x ("scal m"), monoid mode.
Representation scalar_representation(std::size_t m);
/// Z/m acting on itself by multiplication, monoid mode.
Representation ring_representation(std::size_t m);
/// Every actor element acts as the identity; tabular mode.
Representation trivial_representation(const FiniteAlgebra& actor, const FiniteAlgebra& carrier);

/// (x₁, …, xₙ) ↦ x₁⋯xₙ mod m on (Z/m)ⁿ.
MultiMap multiplication_map(std::size_t m, std::size_t n);
/// (x₁, …, xₙ) ↦ x₁ + … + xₙ mod m.
MultiMap addition_map(std::size_t m, std::size_t n);
/// (x₁, …, xₙ) ↦ x_slot.
MultiMap projection_map(std::span<const std::size_t> sizes, std::size_t slot);
MultiMap constant_map(std::span<const std::size_t> sizes, std::size_t dst_size, Element value);

/// r(a₁, …, aₙ) = a₁⋯aₙ using the monoid multiplication of `rep`'s actor.
MultiMap monoid_product_map(const Representation& rep, std::size_t n);

/// Least actor element c with f(c) = f(a) ∘ f(b), if any.
std::optional<Element> find_composite_actor(const Representation& rep, Element a, Element b);

/// Every monoid-mode representation of `actor` (with the given mul/unit) on
/// `carrier`, in lexicographic order of the action tables.
std::vector<Representation> monoid_representations(const FiniteAlgebra& actor, const MonoidOps& ops,
                                                   const FiniteAlgebra& carrier,
                                                   std::size_t budget = term_budget());

}  // namespace omegarep::fixtures
