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
#include <utility>
#include <vector>

#include "omegarep/algebra.hpp"
#include "omegarep/error.hpp"

namespace omegarep {

/// Union-find whose root is always the least element of its class.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0);

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t add();
  std::size_t find(std::size_t x);
  /// Returns true if two distinct classes were merged.
  bool unite(std::size_t x, std::size_t y);

 private:
  std::vector<std::size_t> parent_;
};

using ElementPair = std::pair<Element, Element>;

/// A partition of {0..n-1} stored as an array mapping each element to the
/// least member of its class.
class Congruence {
 public:
  Congruence() = default;
  /// The discrete partition.
  explicit Congruence(std::size_t n);

  /// Throws DimensionMismatch unless rep[x] <= x, rep[rep[x]] == rep[x] and
  /// rep[x] is the least member of its class.
  static Congruence from_representatives(std::vector<Element> rep);
  /// Throws DimensionMismatch unless `classes` partitions {0..n-1}.
  static Congruence from_classes(std::size_t n, const std::vector<std::vector<Element>>& classes);
  static Congruence from_union_find(UnionFind& uf);

  std::size_t carrier_size() const noexcept { return rep_.size(); }
  Element representative(Element x) const { return rep_[x]; }
  const std::vector<Element>& representatives() const noexcept { return rep_; }
  bool same(Element x, Element y) const { return rep_[x] == rep_[y]; }

  std::size_t class_count() const noexcept { return reps_in_order_.size(); }
  /// Position of x's class when classes are sorted by least member.
  Element class_index(Element x) const { return class_of_rep_[rep_[x]]; }
  /// Least member of the i-th class.
  Element class_representative(std::size_t i) const { return reps_in_order_[i]; }
  std::vector<std::vector<Element>> classes() const;

  friend bool operator==(const Congruence& a, const Congruence& b) { return a.rep_ == b.rep_; }

 private:
  void index_classes();

  std::vector<Element> rep_;
  std::vector<Element> reps_in_order_;
  std::vector<Element> class_of_rep_;
};

/// Least congruence of `alg` containing `pairs` and coordinated with every
/// map in `transformations`.
Congruence congruence_closure(const FiniteAlgebra& alg, std::span<const ElementPair> pairs,
                              std::span<const Mapping> transformations = {});

/// First operation-compatibility failure, scanning ops in signature order and
/// tuples lexicographically.
std::optional<NotACongruence> find_congruence_violation(const FiniteAlgebra& alg,
                                                        const Congruence& cong);

struct Quotient {
  FiniteAlgebra algebra;
  /// Class projection (nat N), a homomorphism onto `algebra`.
  Mapping projection;
};

/// Throws NotACongruence when `cong` is not compatible with the operations.
Quotient quotient_algebra(const FiniteAlgebra& alg, const Congruence& cong);

/// The class projection of `cong` as a Mapping.
Mapping projection(const Congruence& cong);

/// The unique h with h ∘ nat(cong) = fprime. Throws KernelTooSmall with the
/// lexicographically least separated pair.
Mapping factor_through_quotient(const Mapping& fprime, const Congruence& cong);

struct CoordinationCheck {
  bool ok = true;
  std::optional<ElementPair> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// Whether x ~ y implies h(x) ~ h(y).
CoordinationCheck is_coordinated(const Mapping& h, const Congruence& cong);

}  // namespace omegarep
