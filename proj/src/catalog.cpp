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

#include "pbw/catalog.hpp"

namespace pbw::catalog {

CatPtr terminal() {
  return std::make_shared<const FinCategory>(
      "terminal", std::vector<std::string>{"*"},
      std::vector<FinCategory::Morphism>{{"id_*", 0, 0}}, std::vector<MorId>{0},
      std::vector<MorId>{0});
}

CatPtr poset(std::string name, std::vector<std::string> objects,
             const std::function<bool(std::size_t, std::size_t)>& leq) {
  const std::size_t n = objects.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq(a, a)) throw StructuralError("order is not reflexive at " + objects[a]);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (leq(a, b) && leq(b, c) && !leq(a, c))
          throw StructuralError("order is not transitive at " + objects[a]);
  }
  std::vector<FinCategory::Morphism> morphisms;
  std::vector<MorId> arrow(n * n, kNone);
  std::vector<MorId> identity(n);
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      if (!leq(a, b)) continue;
      arrow[a * n + b] = static_cast<MorId>(morphisms.size());
      morphisms.push_back({a == b ? "id_" + objects[a] : objects[a] + "<=" + objects[b], a, b});
    }
    identity[a] = arrow[a * n + a];
  }
  const std::size_t m = morphisms.size();
  std::vector<MorId> table(m * m, kNone);
  for (MorId g = 0; g < m; ++g)
    for (MorId f = 0; f < m; ++f)
      if (morphisms[f].cod == morphisms[g].dom)
        table[g * m + f] = arrow[morphisms[f].dom * n + morphisms[g].cod];
  return std::make_shared<const FinCategory>(std::move(name), std::move(objects),
                                             std::move(morphisms), std::move(identity),
                                             std::move(table));
}

CatPtr chain(std::size_t n) {
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  return poset("chain" + std::to_string(n), std::move(objects),
               [](std::size_t a, std::size_t b) { return a <= b; });
}

CatPtr parallel_pair_with_coequalizer() {
  auto tables = with_identities({"a", "b", "c"},
                                {{"u", "a", "b"}, {"v", "a", "b"}, {"e", "b", "c"}, {"w", "a", "c"}},
                                {{"e", "u", "w"}, {"e", "v", "w"}});
  return std::make_shared<const FinCategory>(FinCategory::from_tables("P3", tables));
}

CatPtr group(std::string name, std::vector<std::string> names,
             const std::vector<std::vector<std::size_t>>& mult) {
  const std::size_t n = names.size();
  if (mult.size() != n) throw StructuralError("group table has the wrong size");
  std::vector<FinCategory::Morphism> morphisms;
  for (auto& el : names) morphisms.push_back({std::move(el), 0, 0});
  std::vector<MorId> table(n * n);
  for (std::size_t g = 0; g < n; ++g) {
    if (mult[g].size() != n) throw StructuralError("group table has the wrong size");
    for (std::size_t f = 0; f < n; ++f) {
      if (mult[g][f] >= n) throw StructuralError("group table entry out of range");
      table[g * n + f] = static_cast<MorId>(mult[g][f]);
    }
  }
  return std::make_shared<const FinCategory>(std::move(name), std::vector<std::string>{"*"},
                                             std::move(morphisms), std::vector<MorId>{0},
                                             std::move(table));
}

CatPtr cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back(k == 0 ? "e" : k == 1 ? "g" : "g^" + std::to_string(k));
    for (std::size_t j = 0; j < n; ++j) mult[k][j] = (k + j) % n;
  }
  return group("Z" + std::to_string(n), std::move(names), mult);
}

CatPtr walking_iso() {
  auto tables = with_identities({"0", "1"}, {{"i", "0", "1"}, {"j", "1", "0"}},
                                {{"j", "i", "id_0"}, {"i", "j", "id_1"}});
  return std::make_shared<const FinCategory>(FinCategory::from_tables("iso", tables));
}

std::optional<AdjunctionData> find_adjunction(const FunctorData& left, const FunctorData& right) {
  if (!same_category(left.source, right.target) || !same_category(left.target, right.source))
    throw StructuralError("functors do not form an opposite pair");
  const auto counits = all_nat_trans(compose(left, right), identity_functor(left.target));
  std::optional<AdjunctionData> found;
  enumerate_nat_trans(identity_functor(left.source), compose(right, left), [&](const NatTransData& unit) {
    for (const auto& counit : counits) {
      AdjunctionData adj{left, right, unit, counit};
      if (validate_adjunction(adj).ok()) {
        found = std::move(adj);
        return false;
      }
    }
    return true;
  });
  return found;
}

FunctorData functor_by_names(const CatPtr& source, const CatPtr& target,
                             const std::vector<std::pair<std::string, std::string>>& objects,
                             const std::vector<std::pair<std::string, std::string>>& morphisms) {
  FunctorData f{source, target, std::vector<ObjId>(source->object_count(), kNone),
                std::vector<MorId>(source->morphism_count(), kNone)};
  for (const auto& [a, b] : objects) {
    auto x = source->find_object(a);
    auto y = target->find_object(b);
    if (!x || !y) throw StructuralError("unknown object in " + a + " -> " + b);
    f.obj_map[*x] = *y;
  }
  for (const auto& [a, b] : morphisms) {
    auto x = source->find_morphism(a);
    auto y = target->find_morphism(b);
    if (!x || !y) throw StructuralError("unknown morphism in " + a + " -> " + b);
    f.mor_map[*x] = *y;
  }
  for (ObjId a = 0; a < source->object_count(); ++a)
    if (f.obj_map[a] == kNone) throw StructuralError("object " + source->object_name(a) + " is unmapped");
  for (MorId m = 0; m < source->morphism_count(); ++m)
    if (f.mor_map[m] == kNone) throw StructuralError("morphism " + source->morphism_name(m) + " is unmapped");
  return f;
}

FunctorData monotone_map(const CatPtr& source, const CatPtr& target, const std::vector<ObjId>& objects) {
  if (objects.size() != source->object_count()) throw StructuralError("object map has the wrong size");
  FunctorData f{source, target, objects, {}};
  for (MorId m = 0; m < source->morphism_count(); ++m) {
    const auto hom = target->hom(objects[source->dom(m)], objects[source->cod(m)]);
    if (hom.size() != 1)
      throw StructuralError("no unique image for " + source->morphism_name(m));
    f.mor_map.push_back(hom[0]);
  }
  return f;
}

}  // namespace pbw::catalog
