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

#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "pbw/catalog.hpp"
#include "pbw/corpus.hpp"
#include "pbw/fincat.hpp"

using namespace pbw;

namespace {

// One object, three endomorphisms e, a, b with a non-associative table.
CategoryTables broken_monoid() {
  return with_identities({"*"}, {{"a", "*", "*"}, {"b", "*", "*"}},
                         {{"a", "a", "b"}, {"a", "b", "a"}, {"b", "a", "b"}, {"b", "b", "b"}});
}

}  // namespace

TEST_CASE("catalogue categories satisfy the axioms") {
  for (const auto& c : oracle::small_categories()) {
    CAPTURE(c->name());
    CHECK(validate_category(*c).ok());
    CHECK(validate_category(c->to_tables()).ok());
  }
}

TEST_CASE("non-associative table is a law failure naming the triple") {
  auto t = broken_monoid();
  auto r = validate_category(t);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.has_structural());
  CHECK(r.mentions("associativity"));
  CHECK(r.summary().find("(a, a, a)") != std::string::npos);
}

TEST_CASE("malformed tables are structural, not axiom failures") {
  SUBCASE("dangling composite") {
    auto t = with_identities({"x"}, {}, {{"id_x", "ghost", "id_x"}});
    auto r = validate_category(t);
    CHECK(r.has_structural());
    CHECK(r.mentions("dangling-morphism"));
    CHECK_FALSE(r.mentions("associativity"));
    CHECK_THROWS_AS(FinCategory::from_tables("bad", t), StructuralError);
  }
  SUBCASE("missing composite") {
    auto t = with_identities({"x", "y", "z"}, {{"f", "x", "y"}, {"g", "y", "z"}}, {});
    auto r = validate_category(t);
    CHECK(r.mentions("missing-composite"));
  }
  SUBCASE("identity with wrong ends") {
    CategoryTables t;
    t.objects = {"x", "y"};
    t.morphisms = {{"f", "x", "y"}, {"id_y", "y", "y"}};
    t.identity = {{"x", "f"}, {"y", "id_y"}};
    CHECK(validate_category(t).mentions("identity-ends"));
  }
}

TEST_CASE("degenerate categories") {
  auto empty = std::make_shared<const FinCategory>("empty", std::vector<std::string>{},
                                                   std::vector<FinCategory::Morphism>{},
                                                   std::vector<MorId>{}, std::vector<MorId>{});
  CHECK(validate_category(*empty).ok());
  CHECK(all_functors(empty, catalog::chain(2)).size() == 1);
  CHECK(all_functors(catalog::chain(2), empty).empty());
  CHECK(enumerate_nat_trans(identity_functor(empty), identity_functor(empty), [](const NatTransData&) {
          return true;
        }) == 1);
}

TEST_CASE("functor enumeration matches generate-and-filter") {
  const auto cats = oracle::small_categories();
  for (const auto& s : cats) {
    for (const auto& t : cats) {
      CAPTURE(s->name());
      CAPTURE(t->name());
      auto fast = all_functors(s, t);
      auto slow = oracle::functors(s, t);
      REQUIRE(fast.size() == slow.size());
      for (const auto& f : fast) {
        CHECK(validate_functor(f).ok());
        CHECK(std::count(slow.begin(), slow.end(), f) == 1);
      }
    }
  }
}

TEST_CASE("natural transformation enumeration matches generate-and-filter") {
  const auto cats = oracle::small_categories();
  std::size_t pairs = 0;
  for (const auto& s : cats) {
    for (const auto& t : cats) {
      const auto fs = all_functors(s, t);
      for (const auto& f : fs) {
        for (const auto& g : fs) {
          auto fast = all_nat_trans(f, g);
          auto slow = oracle::nat_trans(f, g);
          REQUIRE(fast.size() == slow.size());
          for (const auto& a : fast) CHECK(std::count(slow.begin(), slow.end(), a) == 1);
          auto iso = natural_iso_search(f, g);
          const bool any_iso = std::any_of(slow.begin(), slow.end(), [&](const NatTransData& a) {
            for (ObjId x = 0; x < s->object_count(); ++x)
              if (!t->is_isomorphism(a.at(x))) return false;
            return true;
          });
          CHECK(iso.has_value() == any_iso);
          ++pairs;
        }
      }
    }
  }
  CHECK(pairs > 100);
}

TEST_CASE("functor validation names the failing morphism") {
  auto c2 = catalog::chain(2);
  auto z3 = catalog::cyclic_group(3);
  auto f = identity_functor(z3);
  f.mor_map[*z3->find_morphism("g^2")] = *z3->find_morphism("g");
  auto r = validate_functor(f);
  CHECK(r.mentions("preserves-composite"));
  auto h = identity_functor(c2);
  h.obj_map[0] = 1;
  CHECK(validate_functor(h).mentions("preserves-ends"));
  h.obj_map.pop_back();
  CHECK(validate_functor(h).has_structural());
}

TEST_CASE("naturality failure names the morphism") {
  auto c2 = catalog::chain(2);
  auto id = identity_functor(c2);
  auto top = constant_functor(c2, c2, 1);
  auto a = all_nat_trans(id, top);
  REQUIRE(a.size() == 1);
  CHECK(validate_nat_trans(a[0]).ok());
  auto z2 = catalog::cyclic_group(2);
  NatTransData bad{identity_functor(z2), constant_functor(z2, z2, 0), {1}};
  CHECK(validate_nat_trans(bad).mentions("naturality"));
}

TEST_CASE("handcrafted adjunctions: transposes round-trip over every hom-set") {
  for (const auto& na : handcrafted_adjunctions()) {
    CAPTURE(na.name);
    const auto& adj = na.adj;
    REQUIRE(validate_adjunction(adj).ok());
    CHECK(check_hom_bijection(adj).ok());
    const auto& d = *adj.lower();
    const auto& c = *adj.upper();
    for (ObjId a = 0; a < d.object_count(); ++a) {
      for (ObjId b = 0; b < c.object_count(); ++b) {
        const auto left = oracle::hom(c, adj.left.obj(a), b);
        const auto right = oracle::hom(d, a, adj.right.obj(b));
        CHECK(left.size() == right.size());
        for (MorId g : left) CHECK(transpose_left(adj, b, transpose_right(adj, a, g)) == g);
        for (MorId f : right) CHECK(transpose_right(adj, a, transpose_left(adj, b, f)) == f);
      }
    }
  }
}

TEST_CASE("corrupted unit breaks a triangle identity") {
  auto z2 = catalog::cyclic_group(2);
  auto adj = identity_adjunction(z2);
  REQUIRE(validate_adjunction(adj).ok());
  adj.unit.components[0] = 1;
  auto r = validate_adjunction(adj);
  CHECK_FALSE(r.has_structural());
  CHECK((r.mentions("triangle-left") || r.mentions("triangle-right")));
}

TEST_CASE("coequalizers agree with the universal-property oracle") {
  std::size_t pairs = 0;
  for (const auto& cp : oracle::small_categories()) {
    const auto& c = *cp;
    for (MorId f = 0; f < c.morphism_count(); ++f) {
      for (MorId g = 0; g < c.morphism_count(); ++g) {
        if (c.dom(f) != c.dom(g) || c.cod(f) != c.cod(g)) continue;
        ++pairs;
        auto all = oracle::coequalizers(c, f, g);
        auto got = coequalizer(c, f, g);
        CHECK(got.has_value() == !all.empty());
        if (!got) continue;
        CHECK(*std::min_element(all.begin(), all.end()) == std::make_pair(got->object, got->map));
        for (const auto& [o, e] : all) CHECK(is_coequalizer(c, f, g, Cocone{o, e}));
      }
    }
  }
  CHECK(pairs > 20);
  auto p3 = catalog::parallel_pair_with_coequalizer();
  auto q = coequalizer(*p3, *p3->find_morphism("u"), *p3->find_morphism("v"));
  REQUIRE(q);
  CHECK(p3->morphism_name(q->map) == "e");
  CHECK_THROWS_AS(coequalizer(*p3, *p3->find_morphism("u"), *p3->find_morphism("e")), DomainError);
}
