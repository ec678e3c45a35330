//  Copyright 2026 The pbwcheck Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "pbw/monad.hpp"

namespace pbw {

namespace {

bool monad_laws_at(const MonadData& m, ObjId x) {
  const auto& c = *m.base;
  const ObjId sx = m.endo.obj(x);
  const MorId mu = m.mu.at(x);
  if (c.compose(mu, m.endo.mor(mu)) != c.compose(mu, m.mu.at(sx))) return false;
  if (c.compose(mu, m.endo.mor(m.eta.at(x))) != c.identity(sx)) return false;
  if (c.compose(mu, m.eta.at(sx)) != c.identity(sx)) return false;
  return true;
}

}  // namespace

ValidationReport validate_monad(const MonadData& m) {
  ValidationReport report;
  if (!m.base) {
    report.structural("missing-base", "monad has no base category");
    return report;
  }
  report.merge(validate_functor(m.endo), "endofunctor");
  if (!report.ok()) return report;
  if (!same_category(m.endo.source, m.base) || !same_category(m.endo.target, m.base)) {
    report.structural("endo-shape", "functor is not an endofunctor of the base");
    return report;
  }
  const auto endo2 = compose(m.endo, m.endo);
  if (!(m.mu.source == endo2) || !(m.mu.target == m.endo))
    report.structural("mu-shape", "multiplication is not endo o endo => endo");
  if (!(m.eta.source == identity_functor(m.base)) || !(m.eta.target == m.endo))
    report.structural("eta-shape", "unit is not Id => endo");
  if (!report.ok()) return report;
  report.merge(validate_nat_trans(m.mu), "multiplication");
  report.merge(validate_nat_trans(m.eta), "unit");
  if (!report.ok()) return report;

  const auto& c = *m.base;
  for (ObjId x = 0; x < c.object_count(); ++x) {
    const ObjId sx = m.endo.obj(x);
    const MorId mu = m.mu.at(x);
    if (c.compose(mu, m.endo.mor(mu)) != c.compose(mu, m.mu.at(sx)))
      report.law("associativity", "mu o S(mu) != mu o mu_S at " + c.object_name(x));
    if (c.compose(mu, m.endo.mor(m.eta.at(x))) != c.identity(sx))
      report.law("right-unit", "mu o S(eta) != id at " + c.object_name(x));
    if (c.compose(mu, m.eta.at(sx)) != c.identity(sx))
      report.law("left-unit", "mu o eta_S != id at " + c.object_name(x));
  }
  return report;
}

MonadData identity_monad(const CatPtr& c) {
  auto id = identity_functor(c);
  return {c, id, identity_nat(id), identity_nat(id)};
}

std::size_t enumerate_monads(const CatPtr& c, const std::function<bool(const MonadData&)>& visit) {
  std::size_t count = 0;
  bool stop = false;
  const auto id = identity_functor(c);
  enumerate_functors(c, c, [&](const FunctorData& s) {
    const auto ss = compose(s, s);
    enumerate_nat_trans(id, s, [&](const NatTransData& eta) {
      enumerate_nat_trans(ss, s, [&](const NatTransData& mu) {
        MonadData m{c, s, mu, eta};
        for (ObjId x = 0; x < c->object_count(); ++x)
          if (!monad_laws_at(m, x)) return true;
        ++count;
        if (!visit(m)) stop = true;
        return !stop;
      });
      return !stop;
    });
    return !stop;
  });
  return count;
}

bool satisfies_algebra_laws(const MonadData& m, AlgebraObject x) {
  const auto& c = *m.base;
  const MorId lambda = x.structure;
  if (c.dom(lambda) != m.endo.obj(x.carrier) || c.cod(lambda) != x.carrier) return false;
  if (c.compose(lambda, m.mu.at(x.carrier)) != c.compose(lambda, m.endo.mor(lambda)))
    return false;
  return c.compose(lambda, m.eta.at(x.carrier)) == c.identity(x.carrier);
}

bool is_algebra_map(const MonadData& m, AlgebraObject x, AlgebraObject y, MorId f) {
  const auto& c = *m.base;
  if (c.dom(f) != x.carrier || c.cod(f) != y.carrier) return false;
  return c.compose(y.structure, m.endo.mor(f)) == c.compose(f, x.structure);
}

std::vector<AlgebraObject> enumerate_algebras(const MonadData& m) {
  std::vector<AlgebraObject> out;
  const auto& c = *m.base;
  for (ObjId x = 0; x < c.object_count(); ++x) {
    for (MorId lambda : c.hom(m.endo.obj(x), x)) {
      if (satisfies_algebra_laws(m, {x, lambda})) out.push_back({x, lambda});
    }
  }
  return out;
}

EMBundle::EMBundle(MonadData m) : monad_(std::move(m)) {
  const auto& base = *monad_.base;
  algebras_ = enumerate_algebras(monad_);
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < algebras_.size(); ++i) {
    const auto& a = algebras_[i];
    algebra_index_.emplace(a, static_cast<ObjId>(i));
    objects.push_back(base.object_name(a.carrier) + "/" + base.morphism_name(a.structure));
  }

  std::vector<FinCategory::Morphism> morphisms;
  std::vector<MorId> underlying;
  std::vector<MorId> identity(algebras_.size(), kNone);
  for (ObjId i = 0; i < algebras_.size(); ++i) {
    for (ObjId j = 0; j < algebras_.size(); ++j) {
      for (MorId f : base.hom(algebras_[i].carrier, algebras_[j].carrier)) {
        if (!is_algebra_map(monad_, algebras_[i], algebras_[j], f)) continue;
        const auto id = static_cast<MorId>(morphisms.size());
        map_index_.emplace(std::tuple{i, j, f}, id);
        if (i == j && base.is_identity(f)) identity[i] = id;
        morphisms.push_back({base.morphism_name(f) + ":" + objects[i] + "->" + objects[j], i, j});
        underlying.push_back(f);
      }
    }
  }
  const std::size_t mcount = morphisms.size();
  std::vector<MorId> table(mcount * mcount, kNone);
  for (MorId g = 0; g < mcount; ++g) {
    for (MorId f = 0; f < mcount; ++f) {
      if (morphisms[f].cod != morphisms[g].dom) continue;
      const MorId gf = base.compose(underlying[g], underlying[f]);
      table[g * mcount + f] = map_index_.at({morphisms[f].dom, morphisms[g].cod, gf});
    }
  }
  em_ = std::make_shared<const FinCategory>(base.name() + "^" + "EM", std::move(objects),
                                            std::move(morphisms), std::move(identity),
                                            std::move(table));

  pi_ = FunctorData{em_, monad_.base, {}, std::move(underlying)};
  for (const auto& a : algebras_) pi_.obj_map.push_back(a.carrier);

  rho_ = FunctorData{monad_.base, em_, {}, {}};
  for (ObjId x = 0; x < base.object_count(); ++x) {
    const AlgebraObject free{monad_.endo.obj(x), monad_.mu.at(x)};
    auto it = algebra_index_.find(free);
    if (it == algebra_index_.end())
      throw StructuralError("free algebra on " + base.object_name(x) + " is not an algebra");
    rho_.obj_map.push_back(it->second);
  }
  for (MorId f = 0; f < base.morphism_count(); ++f)
    rho_.mor_map.push_back(map(rho_.obj(base.dom(f)), rho_.obj(base.cod(f)), monad_.endo.mor(f)));

  const auto pi_rho = compose(pi_, rho_);
  NatTransData unit{identity_functor(monad_.base), pi_rho, {}};
  for (ObjId x = 0; x < base.object_count(); ++x) unit.components.push_back(monad_.eta.at(x));
  const auto rho_pi = compose(rho_, pi_);
  NatTransData counit{rho_pi, identity_functor(em_), {}};
  for (ObjId a = 0; a < algebras_.size(); ++a)
    counit.components.push_back(map(rho_pi.obj(a), a, algebras_[a].structure));
  adj_ = AdjunctionData{rho_, pi_, std::move(unit), std::move(counit)};
}

std::optional<ObjId> EMBundle::find_algebra(AlgebraObject x) const {
  auto it = algebra_index_.find(x);
  if (it == algebra_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> EMBundle::find_map(ObjId from, ObjId to, MorId base) const {
  auto it = map_index_.find({from, to, base});
  if (it == map_index_.end()) return std::nullopt;
  return it->second;
}

MorId EMBundle::map(ObjId from, ObjId to, MorId base) const {
  auto f = find_map(from, to, base);
  if (!f)
    throw DomainError(monad_.base->morphism_name(base) + " is not an algebra map " +
                      em_->object_name(from) + " -> " + em_->object_name(to));
  return *f;
}

EMBundle em_category(const MonadData& m) {
  auto report = validate_monad(m);
  if (!report.ok()) throw StructuralError("not a monad: " + report.summary());
  return EMBundle(m);
}

std::optional<ReflexivePairIds> missing_reflexive_coequalizer(const EMBundle& b) {
  const auto& c = *b.em();
  for (ObjId a = 0; a < c.object_count(); ++a) {
    for (ObjId d = 0; d < c.object_count(); ++d) {
      const auto pairs = c.hom(a, d);
      for (MorId u : pairs) {
        for (MorId v : pairs) {
          for (MorId s : c.hom(d, a)) {
            if (c.compose(u, s) != c.identity(d) || c.compose(v, s) != c.identity(d)) continue;
            if (!coequalizer(c, u, v)) return ReflexivePairIds{u, v, s};
            break;
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool check_reflexive_coequalizers(const EMBundle& b) {
  return !missing_reflexive_coequalizer(b).has_value();
}

}  // namespace pbw
