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

#include "pbw/fincat.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace pbw {

namespace {

std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

FinCategory::FinCategory(std::string name, std::vector<std::string> objects,
                         std::vector<Morphism> morphisms, std::vector<MorId> identity,
                         std::vector<MorId> compose)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity)),
      compose_(std::move(compose)) {
  const std::size_t n = objects_.size();
  const std::size_t m = morphisms_.size();
  auto fail = [&](const std::string& what) {
    throw StructuralError("category " + quote(name_) + ": " + what);
  };
  if (identity_.size() != n) fail("identity table size mismatch");
  if (compose_.size() != m * m) fail("compose table size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (!object_index_.emplace(objects_[i], static_cast<ObjId>(i)).second)
      fail("duplicate object " + quote(objects_[i]));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto& f = morphisms_[i];
    if (f.dom >= n || f.cod >= n) fail("morphism " + quote(f.name) + " has dangling ends");
    if (!morphism_index_.emplace(f.name, static_cast<MorId>(i)).second)
      fail("duplicate morphism " + quote(f.name));
  }
  for (std::size_t a = 0; a < n; ++a) {
    const MorId id = identity_[a];
    if (id >= m) fail("identity of " + quote(objects_[a]) + " is dangling");
    if (morphisms_[id].dom != a || morphisms_[id].cod != a)
      fail("identity of " + quote(objects_[a]) + " is not an endomorphism of it");
  }
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      const MorId gf = compose_[g * m + f];
      const bool composable = morphisms_[f].cod == morphisms_[g].dom;
      if (!composable) {
        if (gf != kNone)
          fail("compose defined on non-composable pair (" + morphisms_[g].name + ", " +
               morphisms_[f].name + ")");
        continue;
      }
      if (gf == kNone)
        fail("compose missing for (" + morphisms_[g].name + ", " + morphisms_[f].name + ")");
      if (gf >= m) fail("compose result dangling");
      if (morphisms_[gf].dom != morphisms_[f].dom || morphisms_[gf].cod != morphisms_[g].cod)
        fail("composite " + morphisms_[g].name + " o " + morphisms_[f].name + " = " +
             morphisms_[gf].name + " has wrong ends");
    }
  }
  hom_.assign(n * n, {});
  for (std::size_t i = 0; i < m; ++i)
    hom_[morphisms_[i].dom * n + morphisms_[i].cod].push_back(static_cast<MorId>(i));
}

namespace {

// Resolves names, recording every structural problem. Returns the dense
// tables only when nothing was wrong.
struct Resolved {
  std::vector<FinCategory::Morphism> morphisms;
  std::vector<MorId> identity;
  std::vector<MorId> compose;
};

std::optional<Resolved> resolve_tables(const CategoryTables& t, ValidationReport& report) {
  std::unordered_map<std::string, ObjId> objs;
  std::unordered_map<std::string, MorId> mors;
  for (const auto& o : t.objects) {
    if (!objs.emplace(o, static_cast<ObjId>(objs.size())).second)
      report.structural("duplicate-object", quote(o));
  }
  Resolved r;
  for (const auto& a : t.morphisms) {
    auto d = objs.find(a.dom);
    auto c = objs.find(a.cod);
    if (d == objs.end()) report.structural("dangling-object", "dom of " + quote(a.name) + " is " + quote(a.dom));
    if (c == objs.end()) report.structural("dangling-object", "cod of " + quote(a.name) + " is " + quote(a.cod));
    if (!mors.emplace(a.name, static_cast<MorId>(r.morphisms.size())).second)
      report.structural("duplicate-morphism", quote(a.name));
    r.morphisms.push_back({a.name, d == objs.end() ? kNone : d->second,
                           c == objs.end() ? kNone : c->second});
  }
  const std::size_t n = objs.size();
  const std::size_t m = r.morphisms.size();
  r.identity.assign(n, kNone);
  for (const auto& [o, f] : t.identity) {
    auto oi = objs.find(o);
    auto fi = mors.find(f);
    if (oi == objs.end()) {
      report.structural("dangling-object", "identity entry for " + quote(o));
      continue;
    }
    if (fi == mors.end()) {
      report.structural("dangling-morphism", "identity of " + quote(o) + " is " + quote(f));
      continue;
    }
    if (r.identity[oi->second] != kNone) report.structural("duplicate-identity", quote(o));
    const auto& mf = r.morphisms[fi->second];
    if (mf.dom != oi->second || mf.cod != oi->second)
      report.structural("identity-ends", quote(f) + " is not an endomorphism of " + quote(o));
    r.identity[oi->second] = fi->second;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (r.identity[a] == kNone) report.structural("missing-identity", quote(t.objects[a]));

  r.compose.assign(m * m, kNone);
  for (const auto& c : t.compose) {
    auto g = mors.find(c.g);
    auto f = mors.find(c.f);
    auto gf = mors.find(c.gf);
    if (g == mors.end() || f == mors.end() || gf == mors.end()) {
      report.structural("dangling-morphism",
                        "compose entry [" + c.g + ", " + c.f + ", " + c.gf + "]");
      continue;
    }
    const auto& mg = r.morphisms[g->second];
    const auto& mf = r.morphisms[f->second];
    const auto& mgf = r.morphisms[gf->second];
    if (mf.cod != mg.dom) {
      report.structural("non-composable", "compose entry for (" + c.g + ", " + c.f + ")");
      continue;
    }
    if (mgf.dom != mf.dom || mgf.cod != mg.cod) {
      report.structural("composite-ends", c.g + " o " + c.f + " = " + c.gf);
      continue;
    }
    auto& slot = r.compose[g->second * m + f->second];
    if (slot != kNone && slot != gf->second)
      report.structural("conflicting-composite", "(" + c.g + ", " + c.f + ")");
    slot = gf->second;
  }
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      if (r.morphisms[f].cod == kNone || r.morphisms[g].dom == kNone) continue;
      if (r.morphisms[f].cod == r.morphisms[g].dom && r.compose[g * m + f] == kNone)
        report.structural("missing-composite",
                          "(" + r.morphisms[g].name + ", " + r.morphisms[f].name + ")");
    }
  }
  if (report.has_structural()) return std::nullopt;
  return r;
}

}  // namespace

CategoryTables with_identities(std::vector<std::string> objects,
                               std::vector<CategoryTables::Arrow> arrows,
                               std::vector<CategoryTables::Composite> composites) {
  CategoryTables t;
  t.objects = std::move(objects);
  for (const auto& o : t.objects) {
    t.morphisms.push_back({"id_" + o, o, o});
    t.identity.emplace_back(o, "id_" + o);
  }
  for (auto& a : arrows) t.morphisms.push_back(std::move(a));
  for (const auto& f : t.morphisms) {
    t.compose.push_back({"id_" + f.cod, f.name, f.name});
    if (f.dom != f.cod || f.name != "id_" + f.dom) t.compose.push_back({f.name, "id_" + f.dom, f.name});
  }
  for (auto& c : composites) t.compose.push_back(std::move(c));
  return t;
}

FinCategory FinCategory::from_tables(std::string name, const CategoryTables& tables) {
  ValidationReport report;
  auto r = resolve_tables(tables, report);
  if (!r) throw StructuralError("category '" + name + "': " + report.summary());
  return FinCategory(std::move(name), tables.objects, std::move(r->morphisms),
                     std::move(r->identity), std::move(r->compose));
}

MorId FinCategory::compose(MorId g, MorId f) const {
  if (cod(f) != dom(g))
    throw DomainError("cannot compose " + morphism_name(g) + " o " + morphism_name(f) +
                      ": cod " + object_name(cod(f)) + " != dom " + object_name(dom(g)));
  return compose_entry(g, f);
}

MorId FinCategory::compose(std::initializer_list<MorId> path) const {
  if (path.size() == 0) throw DomainError("empty composite");
  auto it = std::rbegin(path);
  MorId acc = *it;
  for (++it; it != std::rend(path); ++it) acc = compose(*it, acc);
  return acc;
}

std::span<const MorId> FinCategory::hom(ObjId a, ObjId b) const {
  return hom_.at(a * objects_.size() + b);
}

std::optional<ObjId> FinCategory::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCategory::find_morphism(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FinCategory::inverse(MorId f) const {
  const ObjId a = dom(f);
  const ObjId b = cod(f);
  for (MorId g : hom(b, a)) {
    if (compose_entry(g, f) == identity(a) && compose_entry(f, g) == identity(b)) return g;
  }
  return std::nullopt;
}

bool FinCategory::isomorphic(ObjId a, ObjId b) const {
  for (MorId f : hom(a, b))
    if (is_isomorphism(f)) return true;
  return false;
}

bool FinCategory::same_tables(const FinCategory& o) const {
  if (objects_ != o.objects_ || identity_ != o.identity_ || compose_ != o.compose_) return false;
  if (morphisms_.size() != o.morphisms_.size()) return false;
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    const auto& x = morphisms_[i];
    const auto& y = o.morphisms_[i];
    if (x.name != y.name || x.dom != y.dom || x.cod != y.cod) return false;
  }
  return true;
}

CategoryTables FinCategory::to_tables() const {
  CategoryTables t;
  t.objects = objects_;
  for (const auto& f : morphisms_)
    t.morphisms.push_back({f.name, objects_[f.dom], objects_[f.cod]});
  for (std::size_t a = 0; a < objects_.size(); ++a)
    t.identity.emplace_back(objects_[a], morphisms_[identity_[a]].name);
  const std::size_t m = morphisms_.size();
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f)
      if (compose_[g * m + f] != kNone)
        t.compose.push_back({morphisms_[g].name, morphisms_[f].name,
                             morphisms_[compose_[g * m + f]].name});
  return t;
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_tables(*b);
}

ValidationReport validate_category(const CategoryTables& tables) {
  ValidationReport report;
  auto r = resolve_tables(tables, report);
  if (!r) return report;
  FinCategory c("", tables.objects, std::move(r->morphisms), std::move(r->identity),
                std::move(r->compose));
  return validate_category(c);
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport report;
  const auto m = static_cast<MorId>(c.morphism_count());
  for (MorId f = 0; f < m; ++f) {
    if (c.compose_entry(f, c.identity(c.dom(f))) != f)
      report.law("right-unit", c.morphism_name(f) + " o id != " + c.morphism_name(f));
    if (c.compose_entry(c.identity(c.cod(f)), f) != f)
      report.law("left-unit", "id o " + c.morphism_name(f) + " != " + c.morphism_name(f));
  }
  const auto n = static_cast<ObjId>(c.object_count());
  for (MorId f = 0; f < m; ++f) {
    for (ObjId z = 0; z < n; ++z) {
      for (MorId g : c.hom(c.cod(f), z)) {
        const MorId gf = c.compose_entry(g, f);
        for (ObjId w = 0; w < n; ++w) {
          for (MorId h : c.hom(z, w)) {
            if (c.compose_entry(h, gf) != c.compose_entry(c.compose_entry(h, g), f))
              report.law("associativity", "(" + c.morphism_name(h) + ", " + c.morphism_name(g) +
                                              ", " + c.morphism_name(f) + ")");
          }
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Functors

bool operator==(const FunctorData& a, const FunctorData& b) {
  return same_category(a.source, b.source) && same_category(a.target, b.target) &&
         a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

FunctorData identity_functor(const CatPtr& c) {
  FunctorData f{c, c, {}, {}};
  for (ObjId a = 0; a < c->object_count(); ++a) f.obj_map.push_back(a);
  for (MorId m = 0; m < c->morphism_count(); ++m) f.mor_map.push_back(m);
  return f;
}

FunctorData constant_functor(const CatPtr& source, const CatPtr& target, ObjId b) {
  FunctorData f{source, target, std::vector<ObjId>(source->object_count(), b),
                std::vector<MorId>(source->morphism_count(), target->identity(b))};
  return f;
}

FunctorData compose(const FunctorData& g, const FunctorData& f) {
  if (!same_category(f.target, g.source))
    throw StructuralError("cannot compose functors: target '" + f.target->name() +
                          "' is not source '" + g.source->name() + "'");
  FunctorData gf{f.source, g.target, {}, {}};
  gf.obj_map.reserve(f.obj_map.size());
  for (ObjId x : f.obj_map) gf.obj_map.push_back(g.obj_map[x]);
  gf.mor_map.reserve(f.mor_map.size());
  for (MorId x : f.mor_map) gf.mor_map.push_back(g.mor_map[x]);
  return gf;
}

ValidationReport validate_functor(const FunctorData& fn) {
  ValidationReport report;
  if (!fn.source || !fn.target) {
    report.structural("missing-category", "functor has no source or target");
    return report;
  }
  const auto& s = *fn.source;
  const auto& t = *fn.target;
  if (fn.obj_map.size() != s.object_count()) report.structural("obj-map-size", "object map is not total");
  if (fn.mor_map.size() != s.morphism_count()) report.structural("mor-map-size", "morphism map is not total");
  if (report.has_structural()) return report;
  for (ObjId a = 0; a < s.object_count(); ++a)
    if (fn.obj_map[a] >= t.object_count())
      report.structural("dangling-object", "image of " + s.object_name(a));
  for (MorId f = 0; f < s.morphism_count(); ++f)
    if (fn.mor_map[f] >= t.morphism_count())
      report.structural("dangling-morphism", "image of " + s.morphism_name(f));
  if (report.has_structural()) return report;

  for (MorId f = 0; f < s.morphism_count(); ++f) {
    const MorId ff = fn.mor_map[f];
    if (t.dom(ff) != fn.obj_map[s.dom(f)] || t.cod(ff) != fn.obj_map[s.cod(f)])
      report.law("preserves-ends", "image of " + s.morphism_name(f) + " has wrong dom/cod");
  }
  if (!report.ok()) return report;
  for (ObjId a = 0; a < s.object_count(); ++a)
    if (fn.mor_map[s.identity(a)] != t.identity(fn.obj_map[a]))
      report.law("preserves-identity", "identity of " + s.object_name(a));
  const auto m = static_cast<MorId>(s.morphism_count());
  for (MorId g = 0; g < m; ++g) {
    for (MorId f = 0; f < m; ++f) {
      const MorId gf = s.compose_entry(g, f);
      if (gf == kNone) continue;
      if (fn.mor_map[gf] != t.compose_entry(fn.mor_map[g], fn.mor_map[f]))
        report.law("preserves-composite",
                   "(" + s.morphism_name(g) + ", " + s.morphism_name(f) + ")");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Natural transformations

bool operator==(const NatTransData& a, const NatTransData& b) {
  return a.source == b.source && a.target == b.target && a.components == b.components;
}

NatTransData identity_nat(const FunctorData& f) {
  NatTransData t{f, f, {}};
  for (ObjId a = 0; a < f.source->object_count(); ++a)
    t.components.push_back(f.target->identity(f.obj_map[a]));
  return t;
}

NatTransData vcompose(const NatTransData& b, const NatTransData& a) {
  if (!(a.target == b.source))
    throw StructuralError("vertical composite: target of first is not source of second");
  NatTransData t{a.source, b.target, {}};
  const auto& c = *a.source.target;
  for (ObjId x = 0; x < a.components.size(); ++x)
    t.components.push_back(c.compose(b.at(x), a.at(x)));
  return t;
}

NatTransData whisker_left(const FunctorData& h, const NatTransData& a) {
  NatTransData t{compose(h, a.source), compose(h, a.target), {}};
  for (MorId c : a.components) t.components.push_back(h.mor(c));
  return t;
}

NatTransData whisker_right(const NatTransData& a, const FunctorData& h) {
  NatTransData t{compose(a.source, h), compose(a.target, h), {}};
  for (ObjId x = 0; x < h.source->object_count(); ++x) t.components.push_back(a.at(h.obj(x)));
  return t;
}

ValidationReport validate_nat_trans(const NatTransData& t) {
  ValidationReport report;
  report.merge(validate_functor(t.source), "source functor");
  report.merge(validate_functor(t.target), "target functor");
  if (!report.ok()) return report;
  if (!same_category(t.source.source, t.target.source) ||
      !same_category(t.source.target, t.target.target)) {
    report.structural("functor-shape", "source and target functors are not parallel");
    return report;
  }
  const auto& a = *t.source.source;
  const auto& b = *t.source.target;
  if (t.components.size() != a.object_count()) {
    report.structural("components-size", "component table is not total");
    return report;
  }
  for (ObjId x = 0; x < a.object_count(); ++x) {
    const MorId c = t.components[x];
    if (c >= b.morphism_count()) {
      report.structural("dangling-morphism", "component at " + a.object_name(x));
      continue;
    }
    if (b.dom(c) != t.source.obj(x) || b.cod(c) != t.target.obj(x))
      report.structural("component-ends", "component at " + a.object_name(x) + " has wrong dom/cod");
  }
  if (!report.ok()) return report;
  for (MorId f = 0; f < a.morphism_count(); ++f) {
    const MorId lhs = b.compose_entry(t.target.mor(f), t.at(a.dom(f)));
    const MorId rhs = b.compose_entry(t.at(a.cod(f)), t.source.mor(f));
    if (lhs != rhs) report.law("naturality", "square fails at " + a.morphism_name(f));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Adjunctions

AdjunctionData identity_adjunction(const CatPtr& c) {
  auto id = identity_functor(c);
  return {id, id, identity_nat(id), identity_nat(id)};
}

ValidationReport validate_adjunction(const AdjunctionData& adj) {
  ValidationReport report;
  report.merge(validate_functor(adj.left), "left adjoint");
  report.merge(validate_functor(adj.right), "right adjoint");
  if (!report.ok()) return report;
  if (!same_category(adj.left.source, adj.right.target) ||
      !same_category(adj.left.target, adj.right.source)) {
    report.structural("adjoint-shape", "left and right adjoints are not opposite");
    return report;
  }
  const auto right_left = compose(adj.right, adj.left);
  const auto left_right = compose(adj.left, adj.right);
  if (!(adj.unit.source == identity_functor(adj.lower())) || !(adj.unit.target == right_left))
    report.structural("unit-shape", "unit is not Id => right o left");
  if (!(adj.counit.source == left_right) || !(adj.counit.target == identity_functor(adj.upper())))
    report.structural("counit-shape", "counit is not left o right => Id");
  if (!report.ok()) return report;
  report.merge(validate_nat_trans(adj.unit), "unit");
  report.merge(validate_nat_trans(adj.counit), "counit");
  if (!report.ok()) return report;

  const auto& d = *adj.lower();
  const auto& c = *adj.upper();
  for (ObjId a = 0; a < d.object_count(); ++a) {
    const ObjId ga = adj.left.obj(a);
    if (c.compose(adj.counit.at(ga), adj.left.mor(adj.unit.at(a))) != c.identity(ga))
      report.law("triangle-left", "counit_G o G(unit) != id at " + d.object_name(a));
  }
  for (ObjId b = 0; b < c.object_count(); ++b) {
    const ObjId fb = adj.right.obj(b);
    if (d.compose(adj.right.mor(adj.counit.at(b)), adj.unit.at(fb)) != d.identity(fb))
      report.law("triangle-right", "F(counit) o unit_F != id at " + c.object_name(b));
  }
  return report;
}

MorId transpose_right(const AdjunctionData& adj, ObjId a, MorId g) {
  const auto& c = *adj.upper();
  if (c.dom(g) != adj.left.obj(a))
    throw DomainError("right transpose expects a morphism out of " +
                      c.object_name(adj.left.obj(a)) + ", got " + c.morphism_name(g) +
                      " out of " + c.object_name(c.dom(g)));
  return adj.lower()->compose(adj.right.mor(g), adj.unit.at(a));
}

MorId transpose_left(const AdjunctionData& adj, ObjId b, MorId f) {
  const auto& d = *adj.lower();
  if (d.cod(f) != adj.right.obj(b))
    throw DomainError("left transpose expects a morphism into " +
                      d.object_name(adj.right.obj(b)) + ", got " + d.morphism_name(f) +
                      " into " + d.object_name(d.cod(f)));
  return adj.upper()->compose(adj.counit.at(b), adj.left.mor(f));
}

ValidationReport check_hom_bijection(const AdjunctionData& adj) {
  ValidationReport report;
  const auto& d = *adj.lower();
  const auto& c = *adj.upper();
  for (ObjId a = 0; a < d.object_count(); ++a) {
    for (ObjId b = 0; b < c.object_count(); ++b) {
      const auto up = c.hom(adj.left.obj(a), b);
      const auto down = d.hom(a, adj.right.obj(b));
      const std::string where = "(" + d.object_name(a) + ", " + c.object_name(b) + ")";
      if (up.size() != down.size()) report.law("hom-cardinality", where);
      for (MorId g : up)
        if (transpose_left(adj, b, transpose_right(adj, a, g)) != g)
          report.law("round-trip-right", where + " at " + c.morphism_name(g));
      for (MorId f : down)
        if (transpose_right(adj, a, transpose_left(adj, b, f)) != f)
          report.law("round-trip-left", where + " at " + d.morphism_name(f));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Coequalizers

std::optional<MorId> unique_factorization(const FinCategory& c, MorId e, MorId h) {
  if (c.dom(e) != c.dom(h)) return std::nullopt;
  std::optional<MorId> found;
  for (MorId k : c.hom(c.cod(e), c.cod(h))) {
    if (c.compose_entry(k, e) != h) continue;
    if (found) return std::nullopt;
    found = k;
  }
  return found;
}

bool is_coequalizer(const FinCategory& c, MorId f, MorId g, Cocone q) {
  const ObjId b = c.cod(f);
  if (c.dom(q.map) != b || c.cod(q.map) != q.object) return false;
  if (c.compose_entry(q.map, f) != c.compose_entry(q.map, g)) return false;
  for (ObjId z = 0; z < c.object_count(); ++z) {
    for (MorId h : c.hom(b, z)) {
      if (c.compose_entry(h, f) != c.compose_entry(h, g)) continue;
      if (!unique_factorization(c, q.map, h)) return false;
    }
  }
  return true;
}

std::optional<Cocone> coequalizer(const FinCategory& c, MorId f, MorId g) {
  if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g))
    throw DomainError("coequalizer needs a parallel pair, got " + c.morphism_name(f) + " and " +
                      c.morphism_name(g));
  const ObjId b = c.cod(f);
  for (ObjId q = 0; q < c.object_count(); ++q) {
    for (MorId e : c.hom(b, q)) {
      if (is_coequalizer(c, f, g, {q, e})) return Cocone{q, e};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

class FunctorSearch {
 public:
  FunctorSearch(const CatPtr& s, const CatPtr& t, const FunctorVisitor& visit)
      : s_(*s), t_(*t), visit_(visit), current_{s, t, {}, {}} {
    const std::size_t n = s_.object_count();
    const std::size_t m = s_.morphism_count();
    current_.obj_map.assign(n, 0);
    current_.mor_map.assign(m, 0);
    mor_by_obj_.resize(n);
    for (MorId f = 0; f < m; ++f)
      mor_by_obj_[std::max(s_.dom(f), s_.cod(f))].push_back(f);
    composites_by_mor_.resize(m);
    for (MorId g = 0; g < m; ++g) {
      for (MorId f = 0; f < m; ++f) {
        const MorId gf = s_.compose_entry(g, f);
        if (gf == kNone) continue;
        composites_by_mor_[std::max({g, f, gf})].push_back({g, f, gf});
      }
    }
  }

  std::size_t run() {
    assign_object(0);
    return count_;
  }

 private:
  void assign_object(std::size_t i) {
    if (stop_) return;
    if (i == s_.object_count()) {
      assign_morphism(0);
      return;
    }
    for (ObjId b = 0; b < t_.object_count() && !stop_; ++b) {
      current_.obj_map[i] = b;
      bool feasible = true;
      for (MorId f : mor_by_obj_[i]) {
        if (t_.hom(current_.obj_map[s_.dom(f)], current_.obj_map[s_.cod(f)]).empty()) {
          feasible = false;
          break;
        }
      }
      if (feasible) assign_object(i + 1);
    }
  }

  void assign_morphism(std::size_t i) {
    if (stop_) return;
    if (i == s_.morphism_count()) {
      ++count_;
      if (!visit_(current_)) stop_ = true;
      return;
    }
    const auto f = static_cast<MorId>(i);
    const ObjId a = current_.obj_map[s_.dom(f)];
    const ObjId b = current_.obj_map[s_.cod(f)];
    if (s_.is_identity(f)) {
      current_.mor_map[i] = t_.identity(a);
      if (composites_hold(i)) assign_morphism(i + 1);
      return;
    }
    for (MorId cand : t_.hom(a, b)) {
      if (stop_) return;
      current_.mor_map[i] = cand;
      if (composites_hold(i)) assign_morphism(i + 1);
    }
  }

  bool composites_hold(std::size_t i) const {
    for (const auto& [g, f, gf] : composites_by_mor_[i]) {
      if (current_.mor_map[gf] != t_.compose_entry(current_.mor_map[g], current_.mor_map[f]))
        return false;
    }
    return true;
  }

  const FinCategory& s_;
  const FinCategory& t_;
  const FunctorVisitor& visit_;
  FunctorData current_;
  std::vector<std::vector<MorId>> mor_by_obj_;
  std::vector<std::vector<std::array<MorId, 3>>> composites_by_mor_;
  std::size_t count_ = 0;
  bool stop_ = false;
};

class NatTransSearch {
 public:
  NatTransSearch(const FunctorData& f, const FunctorData& g, const NatTransVisitor& visit,
                 bool invertible_only)
      : a_(*f.source), b_(*f.target), visit_(visit), invertible_only_(invertible_only),
        current_{f, g, std::vector<MorId>(f.source->object_count(), kNone)} {
    mor_by_obj_.resize(a_.object_count());
    for (MorId m = 0; m < a_.morphism_count(); ++m)
      mor_by_obj_[std::max(a_.dom(m), a_.cod(m))].push_back(m);
  }

  std::size_t run() {
    assign(0);
    return count_;
  }

 private:
  void assign(std::size_t i) {
    if (stop_) return;
    if (i == a_.object_count()) {
      ++count_;
      if (!visit_(current_)) stop_ = true;
      return;
    }
    const auto x = static_cast<ObjId>(i);
    for (MorId c : b_.hom(current_.source.obj(x), current_.target.obj(x))) {
      if (stop_) return;
      if (invertible_only_ && !b_.is_isomorphism(c)) continue;
      current_.components[i] = c;
      if (natural_so_far(i)) assign(i + 1);
    }
    current_.components[i] = kNone;
  }

  bool natural_so_far(std::size_t i) const {
    for (MorId m : mor_by_obj_[i]) {
      const MorId lhs = b_.compose_entry(current_.target.mor(m), current_.at(a_.dom(m)));
      const MorId rhs = b_.compose_entry(current_.at(a_.cod(m)), current_.source.mor(m));
      if (lhs != rhs) return false;
    }
    return true;
  }

  const FinCategory& a_;
  const FinCategory& b_;
  const NatTransVisitor& visit_;
  bool invertible_only_;
  NatTransData current_;
  std::vector<std::vector<MorId>> mor_by_obj_;
  std::size_t count_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t enumerate_functors(const CatPtr& source, const CatPtr& target,
                               const FunctorVisitor& visit) {
  return FunctorSearch(source, target, visit).run();
}

std::vector<FunctorData> all_functors(const CatPtr& source, const CatPtr& target) {
  std::vector<FunctorData> out;
  enumerate_functors(source, target, [&](const FunctorData& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::size_t enumerate_nat_trans(const FunctorData& f, const FunctorData& g,
                                const NatTransVisitor& visit, bool invertible_only) {
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target))
    throw StructuralError("natural transformations need parallel functors");
  return NatTransSearch(f, g, visit, invertible_only).run();
}

std::vector<NatTransData> all_nat_trans(const FunctorData& f, const FunctorData& g) {
  std::vector<NatTransData> out;
  enumerate_nat_trans(f, g, [&](const NatTransData& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::optional<NatTransData> natural_iso_search(const FunctorData& f, const FunctorData& g) {
  std::optional<NatTransData> found;
  enumerate_nat_trans(
      f, g,
      [&](const NatTransData& t) {
        found = t;
        return false;
      },
      true);
  return found;
}

}  // namespace pbw
