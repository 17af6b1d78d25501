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

#include "omegarep/tensor.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "omegarep/fixtures.hpp"
#include "omegarep/polymorphism.hpp"

namespace omegarep {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::size_t>& key) const noexcept {
    std::size_t h = key.size();
    for (std::size_t v : key) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Node of the saturation graph: a generator tuple or an Ω₂ op applied to
// classes. Node ids double as union-find elements; a class is identified by
// its least node id.
struct Node {
  bool is_generator;
  std::size_t index;
  std::vector<std::size_t> children;
};

class Saturation {
 public:
  Saturation(std::span<const Representation> reps, const TensorBudgets& budgets)
      : reps_(reps), budgets_(budgets), sig_(reps.front().carrier().signature()) {
    std::vector<std::size_t> sizes;
    for (const auto& rep : reps_) sizes.push_back(rep.carrier().size());
    codec_ = ProductCodec(std::move(sizes));
    actors_ = reps_.front().actor().size();

    // act_c on a generator applies f₁(c) to the first slot.
    acted_generator_.resize(actors_);
    for (Element c = 0; c < actors_; ++c) {
      for (Element g = 0; g < codec_.size(); ++g) {
        Tuple t = codec_.decode(g);
        t[0] = reps_[0].action(c)(t[0]);
        acted_generator_[c].push_back(codec_.encode(t));
      }
    }
  }

  void seed() {
    for (Element g = 0; g < codec_.size(); ++g) generator_nodes_.push_back(add_node(true, g, {}));
    for (std::size_t op = 0; op < sig_.size(); ++op) {
      if (sig_.op(op).arity == 0) add_node(false, op, {});
    }

    const std::size_t n = reps_.size();
    // Slot-wise compatibility with every Ω₂ op.
    for (std::size_t k = 0; k < n; ++k) {
      const FiniteAlgebra& bk = reps_[k].carrier();
      std::vector<std::size_t> frozen_sizes = codec_.sizes();
      frozen_sizes[k] = 1;
      Tuple frozen(n, 0);
      do {
        for (std::size_t op = 0; op < sig_.size(); ++op) {
          const std::size_t arity = sig_.op(op).arity;
          Tuple args(arity, 0);
          std::vector<std::size_t> children(arity);
          do {
            Tuple t = frozen;
            for (std::size_t i = 0; i < arity; ++i) {
              t[k] = args[i];
              children[i] = generator_nodes_[codec_.encode(t)];
            }
            t[k] = bk.apply(op, args);
            uf_.unite(generator_nodes_[codec_.encode(t)], add_node(false, op, children));
          } while (next_tuple(args, bk.size()));
        }
      } while (next_tuple(frozen, frozen_sizes));
    }
    // An actor element may act on any slot.
    for (Element c = 0; c < actors_; ++c) {
      for (Element g = 0; g < codec_.size(); ++g) {
        const Tuple t = codec_.decode(g);
        for (std::size_t k = 1; k < n; ++k) {
          Tuple u = t;
          u[k] = reps_[k].action(c)(u[k]);
          uf_.unite(generator_nodes_[acted_generator_[c][g]], generator_nodes_[codec_.encode(u)]);
        }
      }
    }
  }

  // Restores the congruence property of the node table and the
  // coordination of every class with every actor element.
  void saturate() {
    for (;;) {
      rebuild();
      const std::size_t start = nodes_.size();
      std::vector<std::pair<std::size_t, std::size_t>> pending;
      images_.assign(actors_, {});
      for (Element c = 0; c < actors_; ++c) {
        auto& img = images_[c];
        const std::size_t limit = nodes_.size();
        for (std::size_t id = 0; id < limit; ++id) {
          std::size_t image;
          if (nodes_[id].is_generator) {
            image = uf_.find(generator_nodes_[acted_generator_[c][nodes_[id].index]]);
          } else {
            std::vector<std::size_t> children;
            children.reserve(nodes_[id].children.size());
            for (std::size_t ch : nodes_[id].children) children.push_back(img.at(uf_.find(ch)));
            image = add_node(false, nodes_[id].index, std::move(children));
          }
          auto [it, inserted] = img.emplace(uf_.find(id), image);
          if (!inserted && uf_.find(it->second) != uf_.find(image)) pending.emplace_back(it->second, image);
        }
      }
      bool merged = false;
      for (auto [a, b] : pending) merged |= uf_.unite(a, b);
      if (!merged && nodes_.size() == start) return;
    }
  }

  // Applies every op of positive arity to every tuple of current classes.
  // Returns the node count before the expansion.
  std::size_t expand() {
    const std::size_t old = nodes_.size();
    const auto classes = roots();
    for (std::size_t op = 0; op < sig_.size(); ++op) {
      const std::size_t arity = sig_.op(op).arity;
      if (arity == 0) continue;
      Tuple idx(arity, 0);
      std::vector<std::size_t> children(arity);
      do {
        for (std::size_t i = 0; i < arity; ++i) children[i] = classes[idx[i]];
        add_node(false, op, children);
      } while (next_tuple(idx, classes.size()));
    }
    return old;
  }

  std::vector<std::size_t> roots() {
    std::vector<std::size_t> r;
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
      if (uf_.find(id) == id) r.push_back(id);
    }
    return r;
  }

  // True when every class contains a node created before `old`.
  bool closed_since(std::size_t old) {
    for (std::size_t id = old; id < nodes_.size(); ++id) {
      if (uf_.find(id) >= old) return false;
    }
    return true;
  }

  MultiMap provisional_gen_map() {
    const auto r = roots();
    std::unordered_map<std::size_t, Element> index;
    for (std::size_t i = 0; i < r.size(); ++i) index[r[i]] = static_cast<Element>(i);
    std::vector<Element> values;
    for (std::size_t node : generator_nodes_) values.push_back(index.at(uf_.find(node)));
    return MultiMap(codec_.sizes(), r.size(), std::move(values));
  }

  TensorResult extract() {
    const auto r = roots();

    // Least term per class, by relaxation until nothing improves.
    std::unordered_map<std::size_t, Term> best;
    for (bool improved = true; improved;) {
      improved = false;
      for (std::size_t id = 0; id < nodes_.size(); ++id) {
        std::optional<Term> cand;
        if (nodes_[id].is_generator) {
          cand = Term::generator(nodes_[id].index);
        } else {
          std::vector<Term> args;
          for (std::size_t ch : nodes_[id].children) {
            auto it = best.find(uf_.find(ch));
            if (it == best.end()) break;
            args.push_back(it->second);
          }
          if (args.size() != nodes_[id].children.size()) continue;
          cand = Term::apply(sig_, nodes_[id].index, std::move(args));
        }
        const std::size_t root = uf_.find(id);
        auto it = best.find(root);
        if (it == best.end()) {
          best.emplace(root, *cand);
          improved = true;
        } else if (*cand < it->second) {
          it->second = *cand;
          improved = true;
        }
      }
    }

    std::vector<std::size_t> order = r;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return best.at(a) < best.at(b); });
    std::unordered_map<std::size_t, Element> index;
    std::vector<Term> class_terms;
    for (std::size_t i = 0; i < order.size(); ++i) {
      index[order[i]] = static_cast<Element>(i);
      class_terms.push_back(best.at(order[i]));
    }
    const std::size_t q = order.size();

    std::vector<std::vector<Element>> tables;
    for (std::size_t op = 0; op < sig_.size(); ++op) {
      const std::size_t arity = sig_.op(op).arity;
      std::vector<Element> table;
      Tuple cls(arity, 0);
      std::vector<std::size_t> key(arity + 2);
      do {
        key[0] = 0;
        key[1] = op;
        for (std::size_t i = 0; i < arity; ++i) key[i + 2] = order[cls[i]];
        table.push_back(index.at(uf_.find(memo_.at(key))));
      } while (next_tuple(cls, q));
      tables.push_back(std::move(table));
    }
    FiniteAlgebra quotient(sig_, q, std::move(tables));

    std::vector<Mapping> action;
    for (Element c = 0; c < actors_; ++c) {
      std::vector<Element> v(q);
      for (std::size_t i = 0; i < q; ++i) v[i] = index.at(uf_.find(images_[c].at(order[i])));
      action.emplace_back(q, q, std::move(v));
    }
    Representation induced(reps_.front().actor(), quotient, std::move(action), reps_.front().monoid());

    std::vector<Element> gen;
    for (std::size_t node : generator_nodes_) gen.push_back(index.at(uf_.find(node)));

    TensorResult result;
    result.factors.assign(reps_.begin(), reps_.end());
    result.quotient = std::move(quotient);
    result.induced = std::move(induced);
    result.gen_map = MultiMap(codec_.sizes(), q, std::move(gen));
    result.class_terms = std::move(class_terms);
    return result;
  }

 private:
  std::vector<std::size_t> key_of(bool is_generator, std::size_t index, std::span<const std::size_t> children) {
    std::vector<std::size_t> key;
    key.reserve(children.size() + 2);
    key.push_back(is_generator ? 1 : 0);
    key.push_back(index);
    for (std::size_t ch : children) key.push_back(uf_.find(ch));
    return key;
  }

  std::size_t add_node(bool is_generator, std::size_t index, std::vector<std::size_t> children) {
    auto key = key_of(is_generator, index, children);
    if (auto it = memo_.find(key); it != memo_.end()) return uf_.find(it->second);
    if (nodes_.size() >= budgets_.nodes) {
      throw Error(ErrorKind::BudgetExceeded,
                  "tensor saturation passed the node budget of " + std::to_string(budgets_.nodes));
    }
    for (auto& ch : children) ch = uf_.find(ch);
    const std::size_t id = uf_.add();
    nodes_.push_back({is_generator, index, std::move(children)});
    memo_.emplace(std::move(key), id);
    return id;
  }

  void rebuild() {
    for (bool merged = true; merged;) {
      merged = false;
      memo_.clear();
      for (std::size_t id = 0; id < nodes_.size(); ++id) {
        auto [it, inserted] = memo_.emplace(key_of(nodes_[id].is_generator, nodes_[id].index, nodes_[id].children), id);
        if (!inserted) merged |= uf_.unite(it->second, id);
      }
    }
  }

  std::span<const Representation> reps_;
  TensorBudgets budgets_;
  Signature sig_;
  ProductCodec codec_;
  std::size_t actors_ = 0;
  std::vector<std::vector<Element>> acted_generator_;

  std::vector<Node> nodes_;
  UnionFind uf_;
  std::unordered_map<std::vector<std::size_t>, std::size_t, KeyHash> memo_;
  std::vector<std::size_t> generator_nodes_;
  std::vector<std::unordered_map<std::size_t, std::size_t>> images_;
};

void check_factors(std::span<const Representation> reps) {
  if (reps.empty()) throw Error(ErrorKind::EmptyList, "tensor product of no representations");
  const Representation& first = reps.front();
  for (const auto& rep : reps) {
    if (!rep.is_monoid()) {
      throw Error(ErrorKind::NotMonoidMode, "tensor products need monoid-mode representations");
    }
    if (rep.actor() != first.actor() || rep.monoid() != first.monoid()) {
      throw Error(ErrorKind::ActorMismatch, "factors must share one actor monoid");
    }
    if (rep.carrier().signature() != first.carrier().signature()) {
      throw Error(ErrorKind::SignatureMismatch, "factors must share one Ω₂ signature");
    }
    if (!validate_representation(rep).ok()) {
      throw Error(ErrorKind::InvalidRepresentation, "a factor fails validate_representation");
    }
  }
}

void require_complete(const TensorResult& result) {
  if (!result.complete()) {
    throw Error(ErrorKind::TruncatedResult,
                "saturation stopped at depth " + std::to_string(result.truncated->depth) + " with " +
                    std::to_string(result.truncated->classes) + " classes");
  }
}

std::string tuple_text(std::span<const Element> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

TensorResult tensor_product(std::span<const Representation> reps, const TensorBudgets& budgets) {
  check_factors(reps);
  Saturation sat(reps, budgets);

  auto truncated = [&](std::size_t depth) {
    TensorResult result;
    result.factors.assign(reps.begin(), reps.end());
    result.gen_map = sat.provisional_gen_map();
    result.truncated = Truncation{depth, sat.roots().size()};
    return result;
  };

  sat.seed();
  sat.saturate();
  if (sat.roots().size() > budgets.classes) return truncated(0);
  for (std::size_t level = 1; level <= budgets.depth; ++level) {
    const std::size_t old = sat.expand();
    sat.saturate();
    if (sat.roots().size() > budgets.classes) return truncated(level);
    if (sat.closed_since(old)) return sat.extract();
  }
  return truncated(budgets.depth);
}

TensorResult tensor_power(const Representation& rep, std::size_t n, const TensorBudgets& budgets) {
  if (n == 0) throw Error(ErrorKind::EmptyList, "tensor power needs n >= 1");
  std::vector<Representation> reps(n, rep);
  return tensor_product(reps, budgets);
}

Element tensor_element(const TensorResult& result, std::span<const Element> tuple) {
  require_complete(result);
  if (tuple.size() != result.gen_map.arity()) {
    throw Error(ErrorKind::DimensionMismatch, "tuple has " + std::to_string(tuple.size()) + " entries, expected " +
                                                  std::to_string(result.gen_map.arity()));
  }
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= result.gen_map.src_sizes()[i]) {
      throw Error(ErrorKind::DimensionMismatch, "tuple entry " + std::to_string(i) + " out of range");
    }
  }
  return result.gen_map(tuple);
}

bool generators_generate(const TensorResult& result) {
  require_complete(result);
  const auto& gens = result.gen_map.values();
  const auto span = generated_subalgebra(*result.quotient, gens, result.induced->actions());
  return span.size() == result.quotient->size();
}

RepMorphism factor_polymorphism(const TensorResult& result, const MultiMap& g2, const Representation& target) {
  require_complete(result);
  if (auto c = is_reduced_polymorphism(g2, result.factors, target); !c) {
    throw Error(ErrorKind::NotAReducedPolymorphism, c.witness->describe());
  }
  const FiniteAlgebra& quotient = *result.quotient;
  const Representation& induced = *result.induced;

  // Generator g<i> evaluates to g2 at the i-th tuple (both row-major).
  std::vector<Element> h(quotient.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    h[i] = eval_term(target.carrier(), result.class_terms[i], g2.values());
  }
  Mapping hm(quotient.size(), target.carrier().size(), std::move(h));

  Tuple t(g2.arity(), 0);
  do {
    if (hm(result.gen_map(t)) != g2(t)) {
      throw Error(ErrorKind::FactorizationInconsistent,
                  "generator " + tuple_text(t) + " and the canonical term of its class evaluate differently");
    }
  } while (next_tuple(t, g2.src_sizes()));
  if (auto c = is_homomorphism(hm, quotient, target.carrier()); !c) {
    throw Error(ErrorKind::FactorizationInconsistent,
                "induced map is not a homomorphism at " + c.witness->op + tuple_text(c.witness->args));
  }
  RepMorphism m{Mapping::identity(induced.actor().size()), std::move(hm)};
  if (auto c = is_morphism(m, induced, target); !c) {
    throw Error(ErrorKind::FactorizationInconsistent,
                "induced map does not intertwine the action of " + std::to_string(c.witness->actor));
  }
  return m;
}

namespace {

void invariant_factor_lists(std::size_t remaining, std::size_t prev, std::vector<std::size_t>& cur,
                            std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 1) {
    out.push_back(cur);
    return;
  }
  for (std::size_t d = 2; d <= remaining; ++d) {
    if (remaining % d != 0 || (prev != 1 && d % prev != 0)) continue;
    cur.push_back(d);
    invariant_factor_lists(remaining / d, d, cur, out);
    cur.pop_back();
  }
}

bool is_group_signature(const Signature& sig) {
  if (sig.size() != 3) return false;
  auto has = [&](std::string_view name, std::size_t arity) {
    auto i = sig.find(name);
    return i && sig.op(*i).arity == arity;
  };
  return has("add", 2) && has("neg", 1) && has("zero", 0);
}

}  // namespace

std::vector<FiniteAlgebra> target_library(const Signature& sig, std::size_t bound, std::size_t budget) {
  std::vector<FiniteAlgebra> out;
  if (is_group_signature(sig)) {
    for (std::size_t m = 1; m <= bound; ++m) {
      std::vector<std::vector<std::size_t>> lists;
      std::vector<std::size_t> cur;
      invariant_factor_lists(m, 1, cur, lists);
      for (const auto& orders : lists) {
        // Reorder the canonical add/neg/zero tables to the caller's op order.
        FiniteAlgebra g = fixtures::abelian_group(orders);
        std::vector<std::vector<Element>> tables;
        for (const auto& op : sig.ops()) tables.push_back(g.tables()[g.signature().index_of(op.name)]);
        out.emplace_back(sig, g.size(), std::move(tables));
      }
    }
    return out;
  }

  std::size_t total = 0;
  for (std::size_t n = 1; n <= bound; ++n) {
    std::size_t cells = 0;
    for (const auto& op : sig.ops()) cells += checked_pow(n, op.arity);
    total += checked_pow(n, cells);
    if (total > budget) {
      throw Error(ErrorKind::BudgetExceeded, "enumerating all algebras of size <= " + std::to_string(bound) +
                                                 " passes the budget of " + std::to_string(budget));
    }
    std::vector<std::size_t> lengths;
    for (const auto& op : sig.ops()) lengths.push_back(checked_pow(n, op.arity));
    Tuple flat(cells, 0);
    do {
      std::vector<std::vector<Element>> tables;
      std::size_t pos = 0;
      for (std::size_t len : lengths) {
        tables.emplace_back(flat.begin() + pos, flat.begin() + pos + len);
        pos += len;
      }
      out.emplace_back(sig, n, std::move(tables));
    } while (next_tuple(flat, n));
  }
  return out;
}

UniversalReport verify_universal_property(const TensorResult& result, std::span<const Representation> reps,
                                          std::size_t target_size_bound, std::size_t budget) {
  require_complete(result);
  const auto library = target_library(result.quotient->signature(), target_size_bound, budget);
  return verify_universal_property(result, reps, library, budget);
}

UniversalReport verify_universal_property(const TensorResult& result, std::span<const Representation> reps,
                                          std::span<const FiniteAlgebra> targets, std::size_t budget) {
  require_complete(result);
  if (!std::equal(reps.begin(), reps.end(), result.factors.begin(), result.factors.end())) {
    throw Error(ErrorKind::DimensionMismatch, "representations differ from the factors of the result");
  }
  const Representation& induced = *result.induced;
  const std::size_t generators = result.gen_map.values().size();
  const std::size_t q = induced.carrier().size();

  UniversalReport report;
  for (const auto& v : targets) {
    ++report.targets;
    const std::size_t candidates = checked_pow(v.size(), generators);
    const std::size_t maps = checked_pow(v.size(), q);
    if (candidates > budget || maps > budget) {
      throw Error(ErrorKind::BudgetExceeded, "target of size " + std::to_string(v.size()) +
                                                 " needs more enumeration than the budget allows");
    }
    for (const auto& target : fixtures::monoid_representations(induced.actor(), *induced.monoid(), v, budget)) {
      ++report.representations;
      Tuple values(generators, 0);
      do {
        ++report.candidates;
        MultiMap g2(result.gen_map.src_sizes(), v.size(), values);
        if (!is_reduced_polymorphism(g2, reps, target)) continue;
        ++report.reduced_polymorphisms;

        std::optional<RepMorphism> h;
        try {
          h = factor_polymorphism(result, g2, target);
          ++report.factored;
        } catch (const Error& e) {
          report.counterexamples.push_back("target size " + std::to_string(v.size()) + ", g2 " +
                                           tuple_text(values) + ": " + e.what());
          continue;
        }

        std::size_t solutions = 0;
        Tuple hv(q, 0);
        do {
          bool agrees = true;
          for (std::size_t g = 0; g < generators && agrees; ++g) agrees = hv[result.gen_map.values()[g]] == values[g];
          if (!agrees) continue;
          RepMorphism cand{Mapping::identity(induced.actor().size()), Mapping(q, v.size(), hv)};
          if (is_morphism(cand, induced, target)) ++solutions;
        } while (next_tuple(hv, v.size()));
        if (solutions == 1) {
          ++report.unique;
        } else {
          report.counterexamples.push_back("target size " + std::to_string(v.size()) + ", g2 " +
                                           tuple_text(values) + ": " + std::to_string(solutions) +
                                           " factoring morphisms");
        }
      } while (next_tuple(values, v.size()));
    }
  }
  return report;
}

}  // namespace omegarep
