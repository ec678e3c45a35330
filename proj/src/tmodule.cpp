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

#include "pbw/tmodule.hpp"

namespace pbw {

namespace {

bool module_laws_at(const TModuleData& m, const MonadData& t, ObjId x, bool& action, bool& unit) {
  const auto& c = *m.p.target;
  const MorId nu = m.nu.at(x);
  action = c.compose(nu, m.nu.at(t.endo.obj(x))) == c.compose(nu, m.p.mor(t.mu.at(x)));
  unit = c.compose(nu, m.p.mor(t.eta.at(x))) == c.identity(m.p.obj(x));
  return action && unit;
}

bool all_invertible(const FinCategory& c, const NatTransData& a) {
  for (MorId f : a.components)
    if (!c.is_isomorphism(f)) return false;
  return true;
}

}  // namespace

ValidationReport validate_tmodule(const TModuleData& m, const MonadData& t) {
  ValidationReport report;
  report.merge(validate_functor(m.p), "functor");
  if (!report.ok()) return report;
  if (!same_category(m.p.source, t.base)) {
    report.structural("p-shape", "functor does not start at the base of T");
    return report;
  }
  if (!(m.nu.source == compose(m.p, t.endo)) || !(m.nu.target == m.p)) {
    report.structural("nu-shape", "action is not P o T => P");
    return report;
  }
  report.merge(validate_nat_trans(m.nu), "action");
  if (!report.ok()) return report;
  const auto& d = *t.base;
  for (ObjId x = 0; x < d.object_count(); ++x) {
    bool action = false;
    bool unit = false;
    module_laws_at(m, t, x, action, unit);
    if (!action) report.law("action", "nu o nu T != nu o P mu at " + d.object_name(x));
    if (!unit) report.law("unit", "nu o P eta != id at " + d.object_name(x));
  }
  return report;
}

TModuleData free_module(const FunctorData& p, const MonadData& t) {
  return {compose(p, t.endo), whisker_left(p, t.mu)};
}

TModuleData sg_module(const PsiMorphismData& p) {
  auto report = validate_psi_morphism(p);
  if (!report.ok()) throw StructuralError("not a Psi-morphism: " + report.summary());
  const auto& c = *p.upper();
  const auto sg = compose(p.s.endo, p.adj.left);
  NatTransData nu{compose(sg, p.t.endo), sg, {}};
  for (ObjId x = 0; x < p.lower()->object_count(); ++x)
    nu.components.push_back(
        c.compose(p.s.mu.at(p.adj.left.obj(x)), p.s.endo.mor(p.phi_G.at(x))));
  return {sg, std::move(nu)};
}

bool is_module_map(const TModuleData& m, const TModuleData& n, const NatTransData& h,
                   const MonadData& t) {
  const auto& c = *m.p.target;
  for (ObjId x = 0; x < t.base->object_count(); ++x) {
    if (c.compose(n.nu.at(x), h.at(t.endo.obj(x))) != c.compose(h.at(x), m.nu.at(x))) return false;
  }
  return true;
}

NatTransData transpose_module_left(const NatTransData& alpha, const TModuleData& m, const MonadData& t) {
  if (!(alpha.target == m.p)) throw StructuralError("transformation does not end at the module");
  const auto& c = *m.p.target;
  NatTransData out{compose(alpha.source, t.endo), m.p, {}};
  for (ObjId x = 0; x < t.base->object_count(); ++x)
    out.components.push_back(c.compose(m.nu.at(x), alpha.at(t.endo.obj(x))));
  return out;
}

NatTransData transpose_module_right(const NatTransData& beta, const FunctorData& p, const MonadData& t) {
  if (!(beta.source == compose(p, t.endo)))
    throw StructuralError("transformation does not start at the free module");
  const auto& c = *p.target;
  NatTransData out{p, beta.target, {}};
  for (ObjId x = 0; x < t.base->object_count(); ++x)
    out.components.push_back(c.compose(beta.at(x), p.mor(t.eta.at(x))));
  return out;
}

ValidationReport check_module_hom_bijection(const FunctorData& p, const TModuleData& m,
                                            const MonadData& t) {
  ValidationReport report;
  const auto free = free_module(p, t);
  const auto plain = all_nat_trans(p, m.p);
  std::vector<NatTransData> maps;
  enumerate_nat_trans(free.p, m.p, [&](const NatTransData& beta) {
    if (is_module_map(free, m, beta, t)) maps.push_back(beta);
    return true;
  });
  if (plain.size() != maps.size())
    report.law("hom-cardinality", std::to_string(plain.size()) + " transformations vs " +
                                      std::to_string(maps.size()) + " module maps");
  for (std::size_t i = 0; i < plain.size(); ++i) {
    const auto left = transpose_module_left(plain[i], m, t);
    if (!is_module_map(free, m, left, t))
      report.law("left-is-module-map", "transformation #" + std::to_string(i));
    if (!(transpose_module_right(left, p, t) == plain[i]))
      report.law("round-trip", "right(left(alpha)) != alpha for #" + std::to_string(i));
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!(transpose_module_left(transpose_module_right(maps[i], p, t), m, t) == maps[i]))
      report.law("round-trip", "left(right(beta)) != beta for module map #" + std::to_string(i));
  }
  return report;
}

std::size_t enumerate_tmodules(const CatPtr& d, const CatPtr& c, const MonadData& t,
                               const std::function<bool(const TModuleData&)>& visit) {
  std::size_t count = 0;
  bool stop = false;
  enumerate_functors(d, c, [&](const FunctorData& p) {
    enumerate_nat_trans(compose(p, t.endo), p, [&](const NatTransData& nu) {
      TModuleData m{p, nu};
      bool action = false;
      bool unit = false;
      for (ObjId x = 0; x < d->object_count(); ++x)
        if (!module_laws_at(m, t, x, action, unit)) return true;
      ++count;
      stop = !visit(m);
      return !stop;
    });
    return !stop;
  });
  return count;
}

bool is_free_witness(const TModuleData& m, const MonadData& t, const FunctorData& q,
                     const NatTransData& iso) {
  if (!validate_functor(q).ok()) return false;
  if (!same_category(q.source, t.base) || !same_category(q.target, m.p.target)) return false;
  const auto free = free_module(q, t);
  if (!(iso.source == free.p) || !(iso.target == m.p)) return false;
  if (!validate_nat_trans(iso).ok()) return false;
  if (!all_invertible(*m.p.target, iso)) return false;
  return is_module_map(free, m, iso, t);
}

FreenessReport freeness_check(const TModuleData& m, const MonadData& t) {
  FreenessReport out;
  const auto& c = *m.p.target;
  const auto& d = *t.base;
  enumerate_functors(t.base, m.p.target, [&](const FunctorData& q) {
    ++out.stats.functors;
    for (ObjId x = 0; x < d.object_count(); ++x)
      if (!c.isomorphic(q.obj(t.endo.obj(x)), m.p.obj(x))) return true;
    ++out.stats.candidates;
    const auto free = free_module(q, t);
    enumerate_nat_trans(
        free.p, m.p,
        [&](const NatTransData& iso) {
          ++out.stats.transformations;
          if (!is_module_map(free, m, iso, t)) return true;
          out.q = q;
          out.iso = iso;
          return false;
        },
        /*invertible_only=*/true);
    return !out.q;
  });
  if (out.q) {
    if (!is_free_witness(m, t, *out.q, *out.iso))
      throw Error("freeness witness failed re-validation");
    out.free = true;
    const auto free = free_module(*out.q, t);
    out.equal_to_free = free.p == m.p && free.nu == m.nu;
  }
  return out;
}

PbwReport pbw_check(const Envelope& e, PbwMode mode) {
  PbwReport out;
  out.mode = mode;
  const auto& c = *e.psi().upper();
  const auto& algebras = e.em_t().algebras();
  const auto under = e.underlying_envelope();
  auto matches = [&](ObjId a, ObjId b) { return mode == PbwMode::strict ? a == b : c.isomorphic(a, b); };

  for (ObjId i = 0; i < algebras.size() && !out.conflict; ++i)
    for (ObjId j = i + 1; j < algebras.size(); ++j)
      if (algebras[i].carrier == algebras[j].carrier && !matches(under.obj(i), under.obj(j))) {
        out.conflict = std::pair{i, j};
        break;
      }
  if (out.conflict) return out;

  const auto& pi_t = e.em_t().pi();
  enumerate_functors(e.psi().lower(), e.psi().upper(), [&](const FunctorData& q) {
    ++out.stats.functors;
    for (ObjId i = 0; i < algebras.size(); ++i)
      if (!matches(q.obj(algebras[i].carrier), under.obj(i))) return true;
    ++out.stats.candidates;
    const auto q_pi = compose(q, pi_t);
    if (mode == PbwMode::strict) {
      if (q_pi == under) {
        out.q = q;
        out.iso = identity_nat(under);
      }
    } else {
      ++out.stats.transformations;
      if (auto iso = natural_iso_search(q_pi, under)) {
        out.q = q;
        out.iso = std::move(*iso);
      }
    }
    return !out.q;
  });
  if (out.q) {
    const auto q_pi = compose(*out.q, pi_t);
    const bool valid = validate_functor(*out.q).ok() && out.iso->source == q_pi &&
                       out.iso->target == under && validate_nat_trans(*out.iso).ok() &&
                       all_invertible(c, *out.iso) && (mode == PbwMode::up_to_iso || q_pi == under);
    if (!valid) throw Error("PBW witness failed re-validation");
    out.pbw = true;
  }
  return out;
}

SplitCoequalizerWitness split_coequalizer_witness(const FunctorData& q, const MonadData& t,
                                                  AlgebraObject x) {
  if (!satisfies_algebra_laws(t, x))
    throw DomainError(t.base->morphism_name(x.structure) + " is not a T-algebra structure");
  const auto& c = *q.target;
  const ObjId tx = t.endo.obj(x.carrier);
  SplitCoequalizerWitness w{x,
                            q.mor(x.structure),
                            q.mor(t.eta.at(x.carrier)),
                            q.mor(t.mu.at(x.carrier)),
                            q.mor(t.endo.mor(x.structure)),
                            q.mor(t.eta.at(tx))};
  if (c.compose(w.alpha, w.gamma) != c.compose(w.alpha, w.delta))
    throw RelationError("alpha gamma != alpha delta");
  if (c.compose(w.alpha, w.beta) != c.identity(q.obj(x.carrier)))
    throw RelationError("alpha beta != id");
  if (c.compose(w.gamma, w.epsilon) != c.identity(q.obj(tx)))
    throw RelationError("gamma epsilon != id");
  if (c.compose(w.delta, w.epsilon) != c.compose(w.beta, w.alpha))
    throw RelationError("delta epsilon != beta alpha");
  if (!is_coequalizer(c, w.gamma, w.delta, {q.obj(x.carrier), w.alpha}))
    throw RelationError("Qx is not a coequalizer of gamma and delta");
  auto canonical = coequalizer(c, w.gamma, w.delta);
  if (!canonical) throw RelationError("gamma and delta have no coequalizer");
  auto k = unique_factorization(c, w.alpha, canonical->map);
  if (!k || !c.is_isomorphism(*k))
    throw RelationError("canonical coequalizer is not isomorphic to Qx");
  return w;
}

HarnessReport pb3w_harness(const Envelope& e) {
  HarnessReport out;
  const auto& p = e.psi();
  out.pbw = pbw_check(e, PbwMode::up_to_iso);
  out.freeness = freeness_check(sg_module(p), p.t);
  out.agree = out.pbw.pbw == out.freeness.free;
  if (out.freeness.free) {
    for (const auto& x : e.em_t().algebras()) {
      try {
        out.splits.push_back(split_coequalizer_witness(*out.freeness.q, p.t, x));
      } catch (const RelationError& err) {
        out.failures.push_back(p.lower()->object_name(x.carrier) + "/" +
                               p.lower()->morphism_name(x.structure) + ": " + err.what());
      }
    }
  }
  return out;
}

}  // namespace pbw
