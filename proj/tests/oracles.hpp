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

// Brute-force reference implementations used as test oracles. They only
// read the raw tables of a FinCategory and never call the searches or
// validators under test.

#ifndef PBW_TESTS_ORACLES_HPP_
#define PBW_TESTS_ORACLES_HPP_

#include <functional>
#include <vector>

#include "pbw/catalog.hpp"
#include "pbw/monad.hpp"

namespace oracle {

using pbw::CatPtr;
using pbw::FinCategory;
using pbw::FunctorData;
using pbw::kNone;
using pbw::MorId;
using pbw::NatTransData;
using pbw::ObjId;

inline std::vector<MorId> hom(const FinCategory& c, ObjId a, ObjId b) {
  std::vector<MorId> out;
  for (MorId f = 0; f < c.morphism_count(); ++f)
    if (c.dom(f) == a && c.cod(f) == b) out.push_back(f);
  return out;
}

// Calls visit on every element of the product of the given choice lists.
inline void product(const std::vector<std::vector<MorId>>& choices,
                    const std::function<void(const std::vector<MorId>&)>& visit) {
  std::vector<MorId> pick(choices.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      visit(pick);
      return;
    }
    for (MorId m : choices[i]) {
      pick[i] = m;
      rec(i + 1);
    }
  };
  rec(0);
}

inline bool functor_laws(const FunctorData& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  for (MorId m = 0; m < s.morphism_count(); ++m) {
    if (t.dom(f.mor_map[m]) != f.obj_map[s.dom(m)] || t.cod(f.mor_map[m]) != f.obj_map[s.cod(m)])
      return false;
  }
  for (ObjId a = 0; a < s.object_count(); ++a)
    if (f.mor_map[s.identity(a)] != t.identity(f.obj_map[a])) return false;
  for (MorId g = 0; g < s.morphism_count(); ++g)
    for (MorId h = 0; h < s.morphism_count(); ++h) {
      const MorId gh = s.compose_entry(g, h);
      if (gh != kNone && f.mor_map[gh] != t.compose_entry(f.mor_map[g], f.mor_map[h])) return false;
    }
  return true;
}

// Every object map, and for each the product of the matching hom-sets,
// filtered by the functor laws.
inline std::vector<FunctorData> functors(const CatPtr& s, const CatPtr& t) {
  std::vector<FunctorData> out;
  const std::size_t n = s->object_count();
  std::vector<ObjId> obj(n, 0);
  if (n > 0 && t->object_count() == 0) return out;
  while (true) {
    std::vector<std::vector<MorId>> choices;
    for (MorId m = 0; m < s->morphism_count(); ++m)
      choices.push_back(hom(*t, obj[s->dom(m)], obj[s->cod(m)]));
    product(choices, [&](const std::vector<MorId>& mors) {
      FunctorData f{s, t, obj, mors};
      if (functor_laws(f)) out.push_back(f);
    });
    std::size_t i = 0;
    while (i < n && ++obj[i] == t->object_count()) obj[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline bool natural(const NatTransData& a) {
  const auto& s = *a.source.source;
  const auto& t = *a.source.target;
  for (MorId f = 0; f < s.morphism_count(); ++f) {
    if (t.compose_entry(a.target.mor_map[f], a.components[s.dom(f)]) !=
        t.compose_entry(a.components[s.cod(f)], a.source.mor_map[f]))
      return false;
  }
  return true;
}

inline std::vector<NatTransData> nat_trans(const FunctorData& f, const FunctorData& g) {
  std::vector<std::vector<MorId>> choices;
  for (ObjId a = 0; a < f.source->object_count(); ++a)
    choices.push_back(hom(*f.target, f.obj_map[a], g.obj_map[a]));
  std::vector<NatTransData> out;
  product(choices, [&](const std::vector<MorId>& comps) {
    NatTransData t{f, g, comps};
    if (natural(t)) out.push_back(t);
  });
  return out;
}

inline FunctorData fcompose(const FunctorData& g, const FunctorData& f) {
  FunctorData out{f.source, g.target, {}, {}};
  for (ObjId x : f.obj_map) out.obj_map.push_back(g.obj_map[x]);
  for (MorId x : f.mor_map) out.mor_map.push_back(g.mor_map[x]);
  return out;
}

inline bool monad_laws(const CatPtr& c, const FunctorData& s, const std::vector<MorId>& mu,
                       const std::vector<MorId>& eta) {
  const auto& k = *c;
  for (ObjId x = 0; x < k.object_count(); ++x) {
    const ObjId sx = s.obj_map[x];
    if (k.compose_entry(mu[x], s.mor_map[mu[x]]) != k.compose_entry(mu[x], mu[sx])) return false;
    if (k.compose_entry(mu[x], eta[sx]) != k.identity(sx)) return false;
    if (k.compose_entry(mu[x], s.mor_map[eta[x]]) != k.identity(sx)) return false;
  }
  return true;
}

struct NaiveMonad {
  FunctorData endo;
  std::vector<MorId> mu, eta;
};

inline std::vector<NaiveMonad> monads(const CatPtr& c) {
  std::vector<NaiveMonad> out;
  FunctorData id{c, c, {}, {}};
  for (ObjId a = 0; a < c->object_count(); ++a) id.obj_map.push_back(a);
  for (MorId m = 0; m < c->morphism_count(); ++m) id.mor_map.push_back(m);
  for (const auto& s : functors(c, c)) {
    const auto ss = fcompose(s, s);
    const auto mus = nat_trans(ss, s);
    const auto etas = nat_trans(id, s);
    for (const auto& mu : mus)
      for (const auto& eta : etas)
        if (monad_laws(c, s, mu.components, eta.components)) out.push_back({s, mu.components, eta.components});
  }
  return out;
}

// Structures h : S x -> x satisfying both algebra laws, for every x.
inline std::vector<std::pair<ObjId, MorId>> algebras(const pbw::MonadData& m) {
  const auto& k = *m.base;
  std::vector<std::pair<ObjId, MorId>> out;
  for (ObjId x = 0; x < k.object_count(); ++x) {
    const ObjId sx = m.endo.obj_map[x];
    for (MorId h : hom(k, sx, x)) {
      if (k.compose_entry(h, m.eta.components[x]) != k.identity(x)) continue;
      if (k.compose_entry(h, m.endo.mor_map[h]) != k.compose_entry(h, m.mu.components[x])) continue;
      out.emplace_back(x, h);
    }
  }
  return out;
}

// Every (object, e) with e f = e g through which each such cocone factors
// uniquely.
inline std::vector<std::pair<ObjId, MorId>> coequalizers(const FinCategory& c, MorId f, MorId g) {
  std::vector<std::pair<ObjId, MorId>> out;
  const ObjId b = c.cod(f);
  auto cocone = [&](MorId e) { return c.compose_entry(e, f) == c.compose_entry(e, g); };
  for (MorId e = 0; e < c.morphism_count(); ++e) {
    if (c.dom(e) != b || !cocone(e)) continue;
    bool universal = true;
    for (MorId h = 0; h < c.morphism_count() && universal; ++h) {
      if (c.dom(h) != b || !cocone(h)) continue;
      int count = 0;
      for (MorId k = 0; k < c.morphism_count(); ++k)
        if (c.dom(k) == c.cod(e) && c.cod(k) == c.cod(h) && c.compose_entry(k, e) == h) ++count;
      universal = count == 1;
    }
    if (universal) out.emplace_back(c.cod(e), e);
  }
  return out;
}

inline bool is_iso(const FinCategory& c, MorId f) {
  for (MorId g = 0; g < c.morphism_count(); ++g)
    if (c.compose_entry(g, f) == c.identity(c.dom(f)) && c.compose_entry(f, g) == c.identity(c.cod(f)))
      return true;
  return false;
}

inline bool all_iso(const NatTransData& a) {
  for (MorId m : a.components)
    if (!is_iso(*a.source.target, m)) return false;
  return true;
}

// nu : P T => P with nu (nu T) = nu (P mu) and nu (P eta) = id.
inline bool module_laws(const FunctorData& p, const std::vector<MorId>& nu, const pbw::MonadData& t) {
  const auto& c = *p.target;
  for (ObjId x = 0; x < t.base->object_count(); ++x) {
    const ObjId tx = t.endo.obj_map[x];
    if (c.compose_entry(nu[x], nu[tx]) != c.compose_entry(nu[x], p.mor_map[t.mu.components[x]])) return false;
    if (c.compose_entry(nu[x], p.mor_map[t.eta.components[x]]) != c.identity(p.obj_map[x])) return false;
  }
  return true;
}

struct NaiveModule {
  FunctorData p;
  std::vector<MorId> nu;
};

inline std::vector<NaiveModule> modules(const CatPtr& c, const pbw::MonadData& t) {
  std::vector<NaiveModule> out;
  for (const auto& p : functors(t.base, c))
    for (const auto& nu : nat_trans(fcompose(p, t.endo), p))
      if (module_laws(p, nu.components, t)) out.push_back({p, nu.components});
  return out;
}

// h : M.p => N.p with h nu_M = nu_N (h T).
inline bool module_map(const std::vector<MorId>& nu_m, const std::vector<MorId>& nu_n,
                       const std::vector<MorId>& h, const pbw::MonadData& t, const FinCategory& c) {
  for (ObjId x = 0; x < t.base->object_count(); ++x)
    if (c.compose_entry(h[x], nu_m[x]) != c.compose_entry(nu_n[x], h[t.endo.obj_map[x]])) return false;
  return true;
}

// Some Q : D -> C and a natural iso Q T => M.p commuting with the actions.
inline bool is_free(const FunctorData& p, const std::vector<MorId>& nu, const pbw::MonadData& t) {
  const auto& c = *p.target;
  for (const auto& q : functors(t.base, p.target)) {
    std::vector<MorId> qmu;
    for (MorId m : t.mu.components) qmu.push_back(q.mor_map[m]);
    for (const auto& a : nat_trans(fcompose(q, t.endo), p))
      if (all_iso(a) && module_map(qmu, nu, a.components, t, c)) return true;
  }
  return false;
}

inline std::vector<CatPtr> small_categories() {
  return {pbw::catalog::terminal(), pbw::catalog::chain(2), pbw::catalog::chain(3),
          pbw::catalog::parallel_pair_with_coequalizer(), pbw::catalog::walking_iso(),
          pbw::catalog::cyclic_group(2)};
}

}  // namespace oracle

#endif  // PBW_TESTS_ORACLES_HPP_
