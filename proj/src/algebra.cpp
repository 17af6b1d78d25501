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

#include "omegarep/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace omegarep {

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    r *= base;
  }
  return r;
}

bool next_tuple(Tuple& t, std::span<const std::size_t> sizes) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] + 1 < sizes[i]) {
      ++t[i];
      return true;
    }
    t[i] = 0;
  }
  return false;
}

bool next_tuple(Tuple& t, std::size_t base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] + 1 < base) {
      ++t[i];
      return true;
    }
    t[i] = 0;
  }
  return false;
}

FiniteAlgebra::FiniteAlgebra(Signature sig, std::size_t size, std::vector<std::vector<Element>> tables)
    : sig_(std::move(sig)), size_(size), tables_(std::move(tables)) {
  if (size_ == 0) throw Error(ErrorKind::DimensionMismatch, "carrier must be nonempty");
  if (tables_.size() != sig_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(sig_.size()) +
                                                  " tables, got " + std::to_string(tables_.size()));
  }
  for (std::size_t op = 0; op < sig_.size(); ++op) {
    const std::size_t cells = checked_pow(size_, sig_.op(op).arity);
    if (tables_[op].size() != cells) {
      throw Error(ErrorKind::DimensionMismatch,
                  "table '" + sig_.op(op).name + "' has " + std::to_string(tables_[op].size()) +
                      " cells, expected " + std::to_string(cells));
    }
  }
}

std::size_t FiniteAlgebra::cell_index(std::span<const Element> args) const {
  std::size_t idx = 0;
  for (Element a : args) idx = idx * size_ + a;
  return idx;
}

Mapping::Mapping(std::size_t src_size, std::size_t dst_size, std::vector<Element> values)
    : dst_size_(dst_size), values_(std::move(values)) {
  if (values_.size() != src_size) {
    throw Error(ErrorKind::DimensionMismatch, "mapping has " + std::to_string(values_.size()) +
                                                  " values for a source of size " +
                                                  std::to_string(src_size));
  }
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x] >= dst_size_) {
      throw Error(ErrorKind::DimensionMismatch, "mapping sends " + std::to_string(x) + " to " +
                                                    std::to_string(values_[x]) +
                                                    " outside a target of size " +
                                                    std::to_string(dst_size_));
    }
  }
}

Mapping Mapping::identity(std::size_t n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), Element{0});
  return Mapping(n, n, std::move(v));
}

Mapping Mapping::constant(std::size_t src_size, std::size_t dst_size, Element value) {
  return Mapping(src_size, dst_size, std::vector<Element>(src_size, value));
}

bool Mapping::is_identity() const {
  if (dst_size_ != values_.size()) return false;
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x] != x) return false;
  }
  return true;
}

Mapping compose(const Mapping& outer, const Mapping& inner) {
  if (inner.dst_size() != outer.src_size()) {
    throw Error(ErrorKind::DimensionMismatch, "cannot compose: inner lands in a set of size " +
                                                  std::to_string(inner.dst_size()) +
                                                  ", outer starts from size " +
                                                  std::to_string(outer.src_size()));
  }
  std::vector<Element> v(inner.src_size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = outer(inner(static_cast<Element>(x)));
  return Mapping(inner.src_size(), outer.dst_size(), std::move(v));
}

AlgebraReport validate_algebra(const FiniteAlgebra& alg) {
  AlgebraReport report;
  const Signature& sig = alg.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    Tuple args(sig.op(op).arity, 0);
    auto table = alg.table(op);
    do {
      Element v = table[alg.cell_index(args)];
      if (v == kUndefined) {
        report.violations.push_back({sig.op(op).name, args, AlgebraViolation::Kind::NotTotal, v});
      } else if (v >= alg.size()) {
        report.violations.push_back({sig.op(op).name, args, AlgebraViolation::Kind::OutOfRange, v});
      }
    } while (next_tuple(args, alg.size()));
  }
  return report;
}

void require_valid(const FiniteAlgebra& alg) {
  auto report = validate_algebra(alg);
  if (report.ok()) return;
  const auto& v = report.violations.front();
  std::string where = v.op + "(";
  for (std::size_t i = 0; i < v.args.size(); ++i) where += (i ? "," : "") + std::to_string(v.args[i]);
  where += ")";
  throw Error(ErrorKind::InvalidAlgebra,
              v.kind == AlgebraViolation::Kind::NotTotal
                  ? where + " is not defined"
                  : where + " = " + std::to_string(v.value) + " is outside the carrier");
}

HomCheck is_homomorphism(const Mapping& h, const FiniteAlgebra& src, const FiniteAlgebra& dst) {
  if (src.signature() != dst.signature()) {
    throw Error(ErrorKind::SignatureMismatch, "homomorphism between algebras of different signatures");
  }
  if (h.src_size() != src.size() || h.dst_size() != dst.size()) {
    throw Error(ErrorKind::DimensionMismatch, "mapping dimensions do not match the algebras");
  }
  const Signature& sig = src.signature();
  Tuple image;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    Tuple args(sig.op(op).arity, 0);
    image.resize(args.size());
    do {
      for (std::size_t i = 0; i < args.size(); ++i) image[i] = h(args[i]);
      if (h(src.apply(op, args)) != dst.apply(op, image)) {
        return {false, OpWitness{sig.op(op).name, args}};
      }
    } while (next_tuple(args, src.size()));
  }
  return {};
}

namespace {

// One constraint h(result) = ω(h(args)) of the homomorphism identity.
struct Constraint {
  std::size_t op;
  Tuple args;
  Element result;
};

}  // namespace

std::vector<Mapping> homomorphisms(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                                   std::size_t budget) {
  if (src.signature() != dst.signature()) {
    throw Error(ErrorKind::SignatureMismatch, "homomorphisms between algebras of different signatures");
  }
  const std::size_t n = src.size();
  const Signature& sig = src.signature();

  // Bucket every constraint by the largest element it mentions, so it is
  // checked as soon as that element receives a value.
  std::vector<std::vector<Constraint>> by_last(n);
  for (std::size_t op = 0; op < sig.size(); ++op) {
    Tuple args(sig.op(op).arity, 0);
    do {
      Element r = src.apply(op, args);
      Element last = r;
      for (Element a : args) last = std::max(last, a);
      by_last[last].push_back({op, args, r});
    } while (next_tuple(args, n));
  }

  std::vector<Mapping> out;
  std::vector<Element> values(n, 0);
  std::size_t nodes = 0;
  Tuple image;

  auto consistent = [&](std::size_t k) {
    for (const auto& c : by_last[k]) {
      image.resize(c.args.size());
      for (std::size_t i = 0; i < c.args.size(); ++i) image[i] = values[c.args[i]];
      if (values[c.result] != dst.apply(c.op, image)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.emplace_back(n, dst.size(), values);
      return;
    }
    for (Element v = 0; v < dst.size(); ++v) {
      if (++nodes > budget) {
        throw Error(ErrorKind::BudgetExceeded,
                    "homomorphism search passed the budget of " + std::to_string(budget));
      }
      values[k] = v;
      if (consistent(k)) self(self, k + 1);
    }
  };
  search(search, 0);
  return out;
}

std::vector<Mapping> endomorphisms(const FiniteAlgebra& alg, std::size_t budget) {
  const std::size_t n = alg.size();
  if (n > 6) return homomorphisms(alg, alg, budget);
  const std::size_t total = checked_pow(n, n);
  if (total > budget) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(total) + " self-maps exceed the budget of " +
                                               std::to_string(budget));
  }
  std::vector<Mapping> out;
  Tuple values(n, 0);
  do {
    Mapping h(n, n, values);
    if (is_homomorphism(h, alg, alg)) out.push_back(std::move(h));
  } while (next_tuple(values, n));
  return out;
}

ProductCodec::ProductCodec(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  for (std::size_t s : sizes_) {
    if (s == 0) throw Error(ErrorKind::DimensionMismatch, "empty factor in a product");
    total_ *= s;
  }
}

Element ProductCodec::encode(std::span<const Element> tuple) const {
  if (tuple.size() != sizes_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "tuple length does not match the product");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= sizes_[i]) {
      throw Error(ErrorKind::DimensionMismatch, "tuple component out of range");
    }
    idx = idx * sizes_[i] + tuple[i];
  }
  return static_cast<Element>(idx);
}

Tuple ProductCodec::decode(Element index) const {
  if (index >= total_) throw Error(ErrorKind::DimensionMismatch, "product index out of range");
  Tuple t(sizes_.size());
  std::size_t rest = index;
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    t[i] = static_cast<Element>(rest % sizes_[i]);
    rest /= sizes_[i];
  }
  return t;
}

ProductAlgebra product_algebra(std::span<const FiniteAlgebra> algs) {
  if (algs.empty()) throw Error(ErrorKind::EmptyList, "product of no algebras");
  const Signature& sig = algs.front().signature();
  std::vector<std::size_t> sizes;
  for (const auto& a : algs) {
    if (a.signature() != sig) throw Error(ErrorKind::SignatureMismatch, "product factors differ in signature");
    sizes.push_back(a.size());
  }
  ProductCodec codec(sizes);
  const std::size_t n = codec.size();

  std::vector<std::vector<Element>> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t arity = sig.op(op).arity;
    std::vector<Element> table(checked_pow(n, arity));
    Tuple args(arity, 0);
    std::vector<Tuple> decoded(arity);
    Tuple component_args(arity);
    Tuple result(algs.size());
    std::size_t cell = 0;
    do {
      for (std::size_t i = 0; i < arity; ++i) decoded[i] = codec.decode(args[i]);
      for (std::size_t f = 0; f < algs.size(); ++f) {
        for (std::size_t i = 0; i < arity; ++i) component_args[i] = decoded[i][f];
        result[f] = algs[f].apply(op, component_args);
      }
      table[cell++] = codec.encode(result);
    } while (next_tuple(args, n));
    tables.push_back(std::move(table));
  }
  return {FiniteAlgebra(sig, n, std::move(tables)), std::move(codec)};
}

std::vector<Element> generated_subalgebra(const FiniteAlgebra& alg, std::span<const Element> seed,
                                          std::span<const Mapping> actions) {
  const std::size_t n = alg.size();
  std::vector<char> in(n, 0);
  std::vector<Element> members;
  auto add = [&](Element x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      return true;
    }
    return false;
  };
  for (Element x : seed) {
    if (x >= n) throw Error(ErrorKind::DimensionMismatch, "seed element outside the carrier");
    add(x);
  }
  for (const auto& h : actions) {
    if (h.src_size() != n || h.dst_size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "action is not a self-map of the carrier");
    }
  }

  const Signature& sig = alg.signature();
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Element> snapshot = members;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const std::size_t arity = sig.op(op).arity;
      if (arity > 0 && snapshot.empty()) continue;
      Tuple idx(arity, 0);
      Tuple args(arity);
      do {
        for (std::size_t i = 0; i < arity; ++i) args[i] = snapshot[idx[i]];
        changed |= add(alg.apply(op, args));
      } while (next_tuple(idx, snapshot.size()));
    }
    for (const auto& h : actions) {
      for (Element x : snapshot) changed |= add(h(x));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace omegarep
