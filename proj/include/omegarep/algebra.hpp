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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omegarep/error.hpp"
#include "omegarep/signature.hpp"

namespace omegarep {

/// Marks a table cell that was never filled in.
inline constexpr Element kUndefined = std::numeric_limits<Element>::max();

/// base^exp, saturating at SIZE_MAX.
std::size_t checked_pow(std::size_t base, std::size_t exp);

/// Advances `t` to the next tuple in lexicographic order (last slot fastest)
/// over the mixed radix `sizes`. Returns false after the last tuple.
bool next_tuple(Tuple& t, std::span<const std::size_t> sizes);
bool next_tuple(Tuple& t, std::size_t base);

/// A finite Ω-algebra on the carrier {0..size-1}. Each op of arity p has a
/// row-major table of size^p entries.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  /// Throws DimensionMismatch if the number of tables or a table length
  /// does not match the signature. Cells may hold kUndefined or values out
  /// of range; validate_algebra reports those.
  FiniteAlgebra(Signature sig, std::size_t size, std::vector<std::vector<Element>> tables);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return size_; }
  std::span<const Element> table(std::size_t op) const { return tables_.at(op); }
  const std::vector<std::vector<Element>>& tables() const noexcept { return tables_; }

  std::size_t cell_index(std::span<const Element> args) const;
  Element apply(std::size_t op, std::span<const Element> args) const {
    return tables_[op][cell_index(args)];
  }
  Element apply(std::string_view op, std::span<const Element> args) const {
    return apply(sig_.index_of(op), args);
  }

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  Signature sig_;
  std::size_t size_ = 0;
  std::vector<std::vector<Element>> tables_;
};

/// Total map {0..src_size-1} -> {0..dst_size-1}.
class Mapping {
 public:
  Mapping() = default;
  /// Throws DimensionMismatch on wrong length or out-of-range values.
  Mapping(std::size_t src_size, std::size_t dst_size, std::vector<Element> values);

  static Mapping identity(std::size_t n);
  static Mapping constant(std::size_t src_size, std::size_t dst_size, Element value);

  std::size_t src_size() const noexcept { return values_.size(); }
  std::size_t dst_size() const noexcept { return dst_size_; }
  const std::vector<Element>& values() const noexcept { return values_; }
  Element operator()(Element x) const { return values_[x]; }
  bool is_identity() const;

  friend bool operator==(const Mapping&, const Mapping&) = default;

 private:
  std::size_t dst_size_ = 0;
  std::vector<Element> values_;
};

/// outer ∘ inner. Throws DimensionMismatch when they do not chain.
Mapping compose(const Mapping& outer, const Mapping& inner);

struct AlgebraViolation {
  enum class Kind { OutOfRange, NotTotal };
  std::string op;
  Tuple args;
  Kind kind;
  Element value = kUndefined;
};

struct AlgebraReport {
  std::vector<AlgebraViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

AlgebraReport validate_algebra(const FiniteAlgebra& alg);
/// Throws InvalidAlgebra with the first violation.
void require_valid(const FiniteAlgebra& alg);

/// An operation applied to a tuple where some law fails.
struct OpWitness {
  std::string op;
  Tuple args;
  friend bool operator==(const OpWitness&, const OpWitness&) = default;
};

struct HomCheck {
  bool ok = true;
  std::optional<OpWitness> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// Checks h(ω(x…)) = ω(h x…) for every op and every tuple. Ops are scanned in
/// signature order and tuples lexicographically; the first failure is the
/// witness.
HomCheck is_homomorphism(const Mapping& h, const FiniteAlgebra& src, const FiniteAlgebra& dst);

/// All homomorphisms src -> dst in lexicographic order of their value
/// arrays, by backtracking with per-operation pruning. `budget` bounds the
/// number of search nodes.
std::vector<Mapping> homomorphisms(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                                   std::size_t budget = term_budget());

/// All endomorphisms in lexicographic order. Carriers of size <= 6 are
/// scanned exhaustively (size^size must fit `budget`); larger ones go
/// through homomorphisms().
std::vector<Mapping> endomorphisms(const FiniteAlgebra& alg, std::size_t budget = term_budget());

/// Row-major bijection between tuples and indices of a product carrier.
class ProductCodec {
 public:
  ProductCodec() = default;
  explicit ProductCodec(std::vector<std::size_t> sizes);

  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  std::size_t size() const noexcept { return total_; }
  Element encode(std::span<const Element> tuple) const;
  Tuple decode(Element index) const;

 private:
  std::vector<std::size_t> sizes_;
  std::size_t total_ = 1;
};

struct ProductAlgebra {
  FiniteAlgebra algebra;
  ProductCodec codec;
};

/// Componentwise product. Throws EmptyList or SignatureMismatch.
ProductAlgebra product_algebra(std::span<const FiniteAlgebra> algs);

/// Least subset containing `seed` closed under every op (constants included)
/// and every supplied self-map. Returned sorted.
std::vector<Element> generated_subalgebra(const FiniteAlgebra& alg, std::span<const Element> seed,
                                          std::span<const Mapping> actions = {});

}  // namespace omegarep
