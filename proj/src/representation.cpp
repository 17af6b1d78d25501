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

#include "omegarep/representation.hpp"

namespace omegarep {

Representation::Representation(FiniteAlgebra actor, FiniteAlgebra carrier, std::vector<Mapping> action,
                               std::optional<MonoidOps> monoid)
    : actor_(std::move(actor)),
      carrier_(std::move(carrier)),
      action_(std::move(action)),
      monoid_(std::move(monoid)) {
  if (actor_.signature().kind() != SignatureKind::Omega1) {
    throw Error(ErrorKind::SignatureMismatch, "actor signature must be tagged omega1");
  }
  if (carrier_.signature().kind() != SignatureKind::Omega2) {
    throw Error(ErrorKind::SignatureMismatch, "carrier signature must be tagged omega2");
  }
  require_valid(actor_);
  require_valid(carrier_);
  if (action_.size() != actor_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "expected one action per actor element (" +
                                                  std::to_string(actor_.size()) + "), got " +
                                                  std::to_string(action_.size()));
  }
  for (const auto& h : action_) {
    if (h.src_size() != carrier_.size() || h.dst_size() != carrier_.size()) {
      throw Error(ErrorKind::DimensionMismatch, "action is not a self-map of the carrier");
    }
  }
  if (monoid_) {
    const Signature& sig = actor_.signature();
    if (sig.op(sig.index_of(monoid_->mul)).arity != 2) {
      throw Error(ErrorKind::UnknownOp, "monoid multiplication '" + monoid_->mul + "' is not binary");
    }
    if (sig.op(sig.index_of(monoid_->unit)).arity != 0) {
      throw Error(ErrorKind::UnknownOp, "monoid unit '" + monoid_->unit + "' is not a constant");
    }
  }
}

Element Representation::unit() const {
  if (!monoid_) throw Error(ErrorKind::NotMonoidMode, "representation is tabular");
  return actor_.apply(monoid_->unit, Tuple{});
}

Element Representation::mul(Element a, Element b) const {
  if (!monoid_) throw Error(ErrorKind::NotMonoidMode, "representation is tabular");
  return actor_.apply(monoid_->mul, Tuple{a, b});
}

RepresentationReport validate_representation(const Representation& rep) {
  RepresentationReport report;
  const std::size_t k = rep.actor().size();
  for (Element a = 0; a < k; ++a) {
    auto check = is_homomorphism(rep.action(a), rep.carrier(), rep.carrier());
    if (!check) {
      report.violations.push_back({RepViolation::Kind::NotEndomorphism, a, 0, check.witness});
    }
  }
  if (rep.is_monoid()) {
    for (Element a = 0; a < k; ++a) {
      for (Element b = 0; b < k; ++b) {
        if (rep.action(rep.mul(a, b)) != compose(rep.action(a), rep.action(b))) {
          report.violations.push_back({RepViolation::Kind::MonoidLaw, a, b, std::nullopt});
        }
      }
    }
    const Element e = rep.unit();
    if (!rep.action(e).is_identity()) {
      report.violations.push_back({RepViolation::Kind::UnitNotIdentity, e, e, std::nullopt});
    }
  }
  return report;
}

MorphismCheck is_morphism(const RepMorphism& m, const Representation& src, const Representation& dst) {
  if (m.r.src_size() != src.actor().size() || m.r.dst_size() != dst.actor().size() ||
      m.R.src_size() != src.carrier().size() || m.R.dst_size() != dst.carrier().size()) {
    throw Error(ErrorKind::DimensionMismatch, "morphism dimensions do not match the representations");
  }
  if (auto c = is_homomorphism(m.r, src.actor(), dst.actor()); !c) {
    return {false, MorphismWitness{MorphismWitness::Clause::ActorHom, c.witness}};
  }
  if (auto c = is_homomorphism(m.R, src.carrier(), dst.carrier()); !c) {
    return {false, MorphismWitness{MorphismWitness::Clause::CarrierHom, c.witness}};
  }
  for (Element a = 0; a < src.actor().size(); ++a) {
    const Mapping& fa = src.action(a);
    const Mapping& ga = dst.action(m.r(a));
    for (Element x = 0; x < src.carrier().size(); ++x) {
      if (m.R(fa(x)) != ga(m.R(x))) {
        return {false, MorphismWitness{MorphismWitness::Clause::Intertwining, std::nullopt, a, x}};
      }
    }
  }
  return {};
}

RepMorphism identity_morphism(const Representation& rep) {
  return {Mapping::identity(rep.actor().size()), Mapping::identity(rep.carrier().size())};
}

RepMorphism compose(const RepMorphism& second, const RepMorphism& first) {
  return {compose(second.r, first.r), compose(second.R, first.R)};
}

QuotientRepresentation quotient_representation(const Representation& rep, const Congruence& cong) {
  if (cong.carrier_size() != rep.carrier().size()) {
    throw Error(ErrorKind::DimensionMismatch, "congruence and carrier differ in size");
  }
  for (Element a = 0; a < rep.actor().size(); ++a) {
    if (auto c = is_coordinated(rep.action(a), cong); !c) {
      throw NotCoordinated(a, c.witness->first, c.witness->second);
    }
  }
  Quotient q = quotient_algebra(rep.carrier(), cong);
  const std::size_t k = cong.class_count();
  std::vector<Mapping> action;
  action.reserve(rep.actor().size());
  for (Element a = 0; a < rep.actor().size(); ++a) {
    std::vector<Element> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = cong.class_index(rep.action(a)(cong.class_representative(i)));
    action.emplace_back(k, k, std::move(v));
  }
  RepMorphism j{Mapping::identity(rep.actor().size()), std::move(q.projection)};
  return {Representation(rep.actor(), std::move(q.algebra), std::move(action), rep.monoid()), std::move(j)};
}

RepMorphism factor_morphism_through_quotient(const RepMorphism& m, const Representation& rep,
                                             const Representation& dst, const Congruence& cong) {
  if (auto c = is_morphism(m, rep, dst); !c) {
    throw Error(ErrorKind::NotAMorphism, "the map to factor is not a morphism of representations");
  }
  Mapping h = factor_through_quotient(m.R, cong);
  return {m.r, std::move(h)};
}

}  // namespace omegarep
