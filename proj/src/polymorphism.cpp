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

#include "omegarep/polymorphism.hpp"

#include <algorithm>

namespace omegarep {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Omega1: return "omega1";
    case Family::Omega2: return "omega2";
    case Family::Action: return "action";
    case Family::ReducedAction: return "reduced-action";
  }
  return "?";
}

namespace {

std::string tuple_text(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::vector<std::size_t> carrier_sizes(std::span<const Representation> reps) {
  std::vector<std::size_t> s;
  for (const auto& rep : reps) s.push_back(rep.carrier().size());
  return s;
}

std::vector<std::size_t> actor_sizes(std::span<const Representation> reps) {
  std::vector<std::size_t> s;
  for (const auto& rep : reps) s.push_back(rep.actor().size());
  return s;
}

void check_carrier_shape(const MultiMap& R, std::span<const Representation> reps,
                         const Representation& target) {
  if (R.arity() != reps.size()) {
    throw Error(ErrorKind::DimensionMismatch, "map has " + std::to_string(R.arity()) + " slots but " +
                                                  std::to_string(reps.size()) + " representations were given");
  }
  if (R.src_sizes() != carrier_sizes(reps) || R.dst_size() != target.carrier().size()) {
    throw Error(ErrorKind::DimensionMismatch, "map dimensions do not match the carriers");
  }
  for (const auto& rep : reps) {
    if (rep.carrier().signature() != target.carrier().signature()) {
      throw Error(ErrorKind::SignatureMismatch, "carriers differ in Ω₂ signature");
    }
  }
}

void check_actor_shape(const MultiMap& r, std::span<const Representation> reps, const Representation& target) {
  if (r.arity() != reps.size() || r.src_sizes() != actor_sizes(reps) || r.dst_size() != target.actor().size()) {
    throw Error(ErrorKind::DimensionMismatch, "actor map dimensions do not match the actors");
  }
  for (const auto& rep : reps) {
    if (rep.actor().signature() != target.actor().signature()) {
      throw Error(ErrorKind::SignatureMismatch, "actors differ in Ω₁ signature");
    }
  }
}

void check_common_actor(std::span<const Representation> reps, const Representation& target) {
  for (const auto& rep : reps) {
    if (rep.actor() != target.actor()) {
      throw Error(ErrorKind::ActorMismatch, "representations must share the target's actor");
    }
  }
}

// Section family over one side (carriers or actors): for each slot k and each
// frozen assignment of the other slots, the map x ↦ F(…, x, …) must preserve
// every op of `alg_k` (ops with arity below `min_arity` are skipped).
template <class AlgOf>
FamilyResult section_family(Family family, const MultiMap& F, const FiniteAlgebra& target_alg,
                            AlgOf alg_of, std::size_t min_arity) {
  FamilyResult result;
  const std::size_t n = F.arity();
  Tuple point, image;
  for (std::size_t k = 0; k < n; ++k) {
    const FiniteAlgebra& alg = alg_of(k);
    std::vector<std::size_t> frozen_sizes = F.src_sizes();
    frozen_sizes[k] = 1;
    Tuple frozen(n, 0);
    do {
      const Signature& sig = alg.signature();
      for (std::size_t op = 0; op < sig.size(); ++op) {
        const std::size_t arity = sig.op(op).arity;
        if (arity < min_arity) continue;
        Tuple args(arity, 0);
        image.resize(arity);
        do {
          point = frozen;
          point[k] = alg.apply(op, args);
          const Element lhs = F(point);
          for (std::size_t i = 0; i < arity; ++i) {
            point[k] = args[i];
            image[i] = F(point);
          }
          ++result.checked;
          if (lhs != target_alg.apply(op, image)) {
            result.ok = false;
            SlotWitness w{family, k, {}, {}, sig.op(op).name, args};
            (family == Family::Omega1 ? w.actors : w.elements) = frozen;
            result.witness = std::move(w);
            return result;
          }
        } while (next_tuple(args, alg.size()));
      }
    } while (next_tuple(frozen, frozen_sizes));
  }
  return result;
}

FamilyResult joint_action_family(const MultiMap& r, const MultiMap& R, std::span<const Representation> reps,
                                 const Representation& target) {
  FamilyResult result;
  const std::size_t n = R.arity();
  const auto asizes = actor_sizes(reps);
  Tuple a(n, 0), acted(n);
  do {
    const Mapping& fa = target.action(r(a));
    Tuple m(n, 0);
    do {
      for (std::size_t i = 0; i < n; ++i) acted[i] = reps[i].action(a[i])(m[i]);
      ++result.checked;
      if (R(acted) != fa(R(m))) {
        result.ok = false;
        result.witness = SlotWitness{Family::Action, std::nullopt, a, m, {}, {}};
        return result;
      }
    } while (next_tuple(m, R.src_sizes()));
  } while (next_tuple(a, asizes));
  return result;
}

FamilyResult reduced_action_family(const MultiMap& R, std::span<const Representation> reps,
                                   const Representation& target) {
  FamilyResult result;
  const std::size_t n = R.arity();
  Tuple acted;
  for (std::size_t k = 0; k < n; ++k) {
    for (Element a = 0; a < target.actor().size(); ++a) {
      const Mapping& fk = reps[k].action(a);
      const Mapping& f = target.action(a);
      Tuple m(n, 0);
      do {
        acted = m;
        acted[k] = fk(m[k]);
        ++result.checked;
        if (R(acted) != f(R(m))) {
          result.ok = false;
          Tuple actors(n, 0);
          actors[k] = a;
          result.witness = SlotWitness{Family::ReducedAction, k, std::move(actors), m, {}, {}};
          return result;
        }
      } while (next_tuple(m, R.src_sizes()));
    }
  }
  return result;
}

FamilyResult omega2_family(const MultiMap& R, std::span<const Representation> reps, const Representation& target) {
  return section_family(Family::Omega2, R, target.carrier(),
                        [&](std::size_t k) -> const FiniteAlgebra& { return reps[k].carrier(); }, 0);
}

}  // namespace

std::string SlotWitness::describe() const {
  std::string s(to_string(family));
  if (slot) s += " slot " + std::to_string(*slot + 1);
  switch (family) {
    case Family::Omega1:
      s += " frozen actors " + tuple_text(actors) + " at " + op + tuple_text(args);
      break;
    case Family::Omega2:
      s += " frozen elements " + tuple_text(elements) + " at " + op + tuple_text(args);
      break;
    case Family::Action:
      s += " actors " + tuple_text(actors) + " elements " + tuple_text(elements);
      break;
    case Family::ReducedAction:
      s += " actor " + std::to_string(actors.at(*slot)) + " elements " + tuple_text(elements);
      break;
  }
  return s;
}

SlotwiseReport check_slotwise_equations(const std::optional<MultiMap>& r, const MultiMap& R,
                                        std::span<const Representation> reps,
                                        const Representation& target) {
  check_carrier_shape(R, reps, target);
  SlotwiseReport report;
  if (!r) {
    check_common_actor(reps, target);
    report.reduced_form = true;
    report.omega2 = omega2_family(R, reps, target);
    report.action = reduced_action_family(R, reps, target);
    return report;
  }
  check_actor_shape(*r, reps, target);
  report.omega1 = section_family(Family::Omega1, *r, target.actor(),
                                 [&](std::size_t k) -> const FiniteAlgebra& { return reps[k].actor(); }, 1);
  report.omega2 = omega2_family(R, reps, target);
  report.action = joint_action_family(*r, R, reps, target);
  return report;
}

PolyCheck is_polymorphism(const MultiMap& r, const MultiMap& R, std::span<const Representation> reps,
                          const Representation& target) {
  auto report = check_slotwise_equations(r, R, reps, target);
  for (const FamilyResult* f : {&*report.omega1, &report.omega2, &report.action}) {
    if (!f->ok) return {false, f->witness};
  }
  return {};
}

PolyCheck is_reduced_polymorphism(const MultiMap& R, std::span<const Representation> reps,
                                  const Representation& target) {
  auto report = check_slotwise_equations(std::nullopt, R, reps, target);
  for (const FamilyResult* f : {&report.omega2, &report.action}) {
    if (!f->ok) return {false, f->witness};
  }
  return {};
}

std::optional<Element> identity_element(const Representation& rep) {
  if (rep.is_monoid()) {
    const Element e = rep.unit();
    if (!rep.action(e).is_identity()) {
      throw Error(ErrorKind::MonoidUnitMismatch,
                  "monoid unit " + std::to_string(e) + " does not act as the identity");
    }
    return e;
  }
  for (Element a = 0; a < rep.actor().size(); ++a) {
    if (rep.action(a).is_identity()) return a;
  }
  return std::nullopt;
}

BridgeReport check_bridge(const MultiMap& r, const MultiMap& R, std::span<const Representation> reps,
                          const Representation& target) {
  check_carrier_shape(R, reps, target);
  check_actor_shape(r, reps, target);
  check_common_actor(reps, target);

  BridgeReport report;
  const std::size_t n = R.arity();
  for (Element e = 0; e < target.actor().size() && !report.identity; ++e) {
    bool all = target.action(e).is_identity();
    for (const auto& rep : reps) all = all && rep.action(e).is_identity();
    if (all) report.identity = e;
  }
  report.polymorphism = is_polymorphism(r, R, reps, target).ok;
  report.reduced = is_reduced_polymorphism(R, reps, target).ok;
  if (!report.identity) return report;

  const Element e = *report.identity;
  report.evaluated = true;
  report.unit_slots_ok = true;
  for (std::size_t k = 0; k < n && report.unit_slots_ok; ++k) {
    Tuple a(n, e);
    for (Element x = 0; x < target.actor().size(); ++x) {
      a[k] = x;
      if (r(a) != x) {
        report.unit_slots_ok = false;
        report.unit_slots_witness = std::pair{k, x};
        break;
      }
    }
  }

  report.specialization_ok = true;
  Tuple joint, single;
  for (std::size_t k = 0; k < n && report.specialization_ok; ++k) {
    for (Element x = 0; x < target.actor().size() && report.specialization_ok; ++x) {
      Tuple a(n, e);
      a[k] = x;
      const Mapping& joint_target = target.action(r(a));
      Tuple m(n, 0);
      do {
        joint.resize(n);
        for (std::size_t i = 0; i < n; ++i) joint[i] = reps[i].action(a[i])(m[i]);
        single = m;
        single[k] = reps[k].action(x)(m[k]);
        if (R(joint) != R(single) || joint_target(R(m)) != target.action(x)(R(m))) {
          report.specialization_ok = false;
          report.specialization_witness = SlotWitness{Family::Action, k, a, m, {}, {}};
          break;
        }
      } while (next_tuple(m, R.src_sizes()));
    }
  }
  return report;
}

CommutationCheck check_action_commutation(const MultiMap& R, std::span<const Representation> reps,
                                          const Representation& target) {
  if (auto c = is_reduced_polymorphism(R, reps, target); !c) {
    throw Error(ErrorKind::NotAReducedPolymorphism, c.witness->describe());
  }
  const std::size_t n = R.arity();
  const std::size_t actors = target.actor().size();
  Tuple both;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) continue;
      for (Element a = 0; a < actors; ++a) {
        for (Element b = 0; b < actors; ++b) {
          const Mapping& fa = target.action(a);
          const Mapping& fb = target.action(b);
          Tuple m(n, 0);
          do {
            both = m;
            both[k] = reps[k].action(a)(m[k]);
            both[l] = reps[l].action(b)(m[l]);
            const Element base = R(m);
            const Element direct = R(both);
            if (fa(fb(base)) != fb(fa(base)) || direct != fa(fb(base))) {
              return {false, CommutationWitness{k, l, a, b, m}};
            }
          } while (next_tuple(m, R.src_sizes()));
        }
      }
    }
  }
  return {};
}

}  // namespace omegarep
