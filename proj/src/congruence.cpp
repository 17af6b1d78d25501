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

#include "omegarep/congruence.hpp"

#include <algorithm>
#include <numeric>

namespace omegarep {

UnionFind::UnionFind(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::add() {
  parent_.push_back(parent_.size());
  return parent_.size() - 1;
}

std::size_t UnionFind::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) x = std::exchange(parent_[x], root);
  return root;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (y < x) std::swap(x, y);
  parent_[y] = x;
  return true;
}

Congruence::Congruence(std::size_t n) : rep_(n) {
  std::iota(rep_.begin(), rep_.end(), Element{0});
  index_classes();
}

Congruence Congruence::from_representatives(std::vector<Element> rep) {
  for (std::size_t x = 0; x < rep.size(); ++x) {
    if (rep[x] > x || rep[rep[x]] != rep[x]) {
      throw Error(ErrorKind::DimensionMismatch,
                  "representative array is not canonical at " + std::to_string(x));
    }
  }
  Congruence c;
  c.rep_ = std::move(rep);
  c.index_classes();
  return c;
}

Congruence Congruence::from_classes(std::size_t n, const std::vector<std::vector<Element>>& classes) {
  std::vector<Element> rep(n, kUndefined);
  for (const auto& cls : classes) {
    if (cls.empty()) throw Error(ErrorKind::DimensionMismatch, "empty class in a partition");
    Element least = *std::min_element(cls.begin(), cls.end());
    for (Element x : cls) {
      if (x >= n) throw Error(ErrorKind::DimensionMismatch, "class member " + std::to_string(x) + " out of range");
      if (rep[x] != kUndefined) {
        throw Error(ErrorKind::DimensionMismatch, "element " + std::to_string(x) + " appears in two classes");
      }
      rep[x] = least;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] == kUndefined) {
      throw Error(ErrorKind::DimensionMismatch, "element " + std::to_string(x) + " is in no class");
    }
  }
  return from_representatives(std::move(rep));
}

Congruence Congruence::from_union_find(UnionFind& uf) {
  std::vector<Element> rep(uf.size());
  for (std::size_t x = 0; x < rep.size(); ++x) rep[x] = static_cast<Element>(uf.find(x));
  return from_representatives(std::move(rep));
}

void Congruence::index_classes() {
  reps_in_order_.clear();
  class_of_rep_.assign(rep_.size(), kUndefined);
  for (std::size_t x = 0; x < rep_.size(); ++x) {
    if (rep_[x] == x) {
      class_of_rep_[x] = static_cast<Element>(reps_in_order_.size());
      reps_in_order_.push_back(static_cast<Element>(x));
    }
  }
}

std::vector<std::vector<Element>> Congruence::classes() const {
  std::vector<std::vector<Element>> out(reps_in_order_.size());
  for (std::size_t x = 0; x < rep_.size(); ++x) out[class_index(static_cast<Element>(x))].push_back(static_cast<Element>(x));
  return out;
}

Congruence congruence_closure(const FiniteAlgebra& alg, std::span<const ElementPair> pairs,
                              std::span<const Mapping> transformations) {
  const std::size_t n = alg.size();
  UnionFind uf(n);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw Error(ErrorKind::DimensionMismatch, "seed pair outside the carrier");
    uf.unite(x, y);
  }
  for (const auto& h : transformations) {
    if (h.src_size() != n || h.dst_size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "transformation is not a self-map of the carrier");
    }
  }

  const Signature& sig = alg.signature();
  std::vector<Element> seen;
  Tuple args, rep_args;
  // Operation merges and transformation merges alternate until one full
  // pass merges nothing.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const std::size_t arity = sig.op(op).arity;
      seen.assign(alg.table(op).size(), kUndefined);
      args.assign(arity, 0);
      rep_args.resize(arity);
      do {
        for (std::size_t i = 0; i < arity; ++i) rep_args[i] = static_cast<Element>(uf.find(args[i]));
        const std::size_t key = alg.cell_index(rep_args);
        const Element result = alg.apply(op, args);
        if (seen[key] == kUndefined) {
          seen[key] = result;
        } else {
          changed |= uf.unite(seen[key], result);
        }
      } while (next_tuple(args, n));
    }
    for (const auto& h : transformations) {
      seen.assign(n, kUndefined);
      for (Element x = 0; x < n; ++x) {
        const std::size_t rx = uf.find(x);
        if (seen[rx] == kUndefined) {
          seen[rx] = h(x);
        } else {
          changed |= uf.unite(seen[rx], h(x));
        }
      }
    }
  }
  return Congruence::from_union_find(uf);
}

std::optional<NotACongruence> find_congruence_violation(const FiniteAlgebra& alg,
                                                        const Congruence& cong) {
  if (cong.carrier_size() != alg.size()) {
    throw Error(ErrorKind::DimensionMismatch, "congruence and algebra differ in carrier size");
  }
  const Signature& sig = alg.signature();
  std::vector<std::size_t> first;
  Tuple args, rep_args;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t arity = sig.op(op).arity;
    const std::size_t cells = alg.table(op).size();
    first.assign(alg.table(op).size(), cells);
    args.assign(arity, 0);
    rep_args.resize(arity);
    std::size_t cell = 0;
    do {
      for (std::size_t i = 0; i < arity; ++i) rep_args[i] = cong.representative(args[i]);
      const std::size_t key = alg.cell_index(rep_args);
      if (first[key] == cells) {
        first[key] = cell;
      } else if (!cong.same(alg.table(op)[first[key]], alg.table(op)[cell])) {
        Tuple lhs(arity);
        std::size_t rest = first[key];
        for (std::size_t i = arity; i-- > 0;) {
          lhs[i] = static_cast<Element>(rest % alg.size());
          rest /= alg.size();
        }
        return NotACongruence(sig.op(op).name, std::move(lhs), args);
      }
      ++cell;
    } while (next_tuple(args, alg.size()));
  }
  return std::nullopt;
}

Mapping projection(const Congruence& cong) {
  std::vector<Element> v(cong.carrier_size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = cong.class_index(static_cast<Element>(x));
  const std::size_t n = v.size();
  return Mapping(n, cong.class_count(), std::move(v));
}

Quotient quotient_algebra(const FiniteAlgebra& alg, const Congruence& cong) {
  if (auto violation = find_congruence_violation(alg, cong)) throw *violation;
  const Signature& sig = alg.signature();
  const std::size_t k = cong.class_count();
  std::vector<std::vector<Element>> tables;
  Tuple cls, args;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t arity = sig.op(op).arity;
    std::vector<Element> table;
    table.reserve(checked_pow(k, arity));
    cls.assign(arity, 0);
    args.resize(arity);
    do {
      for (std::size_t i = 0; i < arity; ++i) args[i] = cong.class_representative(cls[i]);
      table.push_back(cong.class_index(alg.apply(op, args)));
    } while (next_tuple(cls, k));
    tables.push_back(std::move(table));
  }
  return {FiniteAlgebra(sig, k, std::move(tables)), projection(cong)};
}

namespace {

// Least (x, y) with x ~ y and differ(x, y). Within a class the least such x
// is always the class representative.
template <class Differ>
std::optional<ElementPair> least_separated_pair(const Congruence& cong, Differ differ) {
  std::optional<ElementPair> best;
  for (Element y = 0; y < cong.carrier_size(); ++y) {
    Element x = cong.representative(y);
    if (x != y && differ(x, y)) {
      if (!best || ElementPair{x, y} < *best) best = ElementPair{x, y};
    }
  }
  return best;
}

}  // namespace

Mapping factor_through_quotient(const Mapping& fprime, const Congruence& cong) {
  if (fprime.src_size() != cong.carrier_size()) {
    throw Error(ErrorKind::DimensionMismatch, "map source differs from the congruence carrier");
  }
  if (auto w = least_separated_pair(cong, [&](Element x, Element y) { return fprime(x) != fprime(y); })) {
    throw KernelTooSmall(w->first, w->second);
  }
  std::vector<Element> v(cong.class_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fprime(cong.class_representative(i));
  return Mapping(cong.class_count(), fprime.dst_size(), std::move(v));
}

CoordinationCheck is_coordinated(const Mapping& h, const Congruence& cong) {
  if (h.src_size() != cong.carrier_size() || h.dst_size() != cong.carrier_size()) {
    throw Error(ErrorKind::DimensionMismatch, "map is not a self-map of the congruence carrier");
  }
  if (auto w = least_separated_pair(cong, [&](Element x, Element y) { return !cong.same(h(x), h(y)); })) {
    return {false, w};
  }
  return {};
}

}  // namespace omegarep
