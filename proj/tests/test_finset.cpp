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
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "finset_oracles.hpp"
#include "pbw/finset.hpp"

using namespace pbw;
using namespace pbw::finset;

namespace {

const std::vector<std::string> kMonads{"maybe", "powerset", "vecF2", "gset:Z1", "gset:Z2", "gset:Z3", "gset:S3"};

// Labelled lattices: reflexive, antisymmetric, transitive relations on n
// points in which every pair has a least upper bound and a bottom exists.
std::size_t count_lattices(std::size_t n) {
  if (n == 0) return 0;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells.size()); ++bits) {
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (bits >> k & 1) le[cells[k].first][cells[k].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && le[i][j] && le[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (le[i][j] && le[j][k] && !le[i][k]) ok = false;
      }
    if (!ok) continue;
    bool bottom = false;
    for (std::size_t b = 0; b < n && !bottom; ++b) {
      bottom = true;
      for (std::size_t i = 0; i < n; ++i) bottom = bottom && le[b][i];
    }
    if (!bottom) continue;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        std::size_t least = 0;
        for (std::size_t u = 0; u < n; ++u) {
          if (!le[i][u] || !le[j][u]) continue;
          bool below_all = true;
          for (std::size_t w = 0; w < n; ++w)
            if (le[i][w] && le[j][w] && !le[u][w]) below_all = false;
          least += below_all;
        }
        ok = least == 1;
      }
    count += ok;
  }
  return count;
}

using Perm = std::vector<std::size_t>;

std::vector<Perm> permutations(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm after(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

// Homomorphisms Z_k -> Sym(n): permutations p with p^k = id.
std::size_t count_cyclic_actions(std::size_t n, std::size_t k) {
  std::size_t count = 0;
  for (const auto& p : permutations(n)) {
    Perm q = p;
    for (std::size_t i = 1; i < k; ++i) q = after(p, q);
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    count += q == id;
  }
  return count;
}

// Homomorphisms S3 -> Sym(n) via <a, b | a^2, b^3, (ab)^2>.
std::size_t count_s3_actions(std::size_t n) {
  const auto ps = permutations(n);
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::size_t count = 0;
  for (const auto& a : ps) {
    if (after(a, a) != id) continue;
    for (const auto& b : ps) {
      if (after(b, after(b, b)) != id) continue;
      const auto ab = after(a, b);
      count += after(ab, ab) == id;
    }
  }
  return count;
}

// F2-vector space structures on n labelled points: n! / |GL(k, F2)| when n = 2^k.
std::size_t count_vector_spaces(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  if (n == 0 || (std::size_t{1} << k) != n) return 0;
  std::size_t gl = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (k * k)); ++m) {
    std::set<std::uint64_t> image;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
      std::uint64_t w = 0;
      for (std::size_t r = 0; r < k; ++r) {
        std::uint64_t row = m >> (r * k) & ((std::uint64_t{1} << k) - 1);
        w |= static_cast<std::uint64_t>(__builtin_popcountll(row & v) & 1) << r;
      }
      image.insert(w);
    }
    gl += image.size() == (std::size_t{1} << k);
  }
  std::size_t fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= i;
  return fact / gl;
}

// Delegates to powerset except for one multiplication entry.
class BrokenPowerset : public CatalogueMonad {
 public:
  std::string id() const override { return "broken"; }
  Elem size(Elem n) const override { return base_->size(n); }
  Elem eta(Elem n, Elem i) const override { return base_->eta(n, i); }
  Elem fmap(const FinSetMap& f, Elem t) const override { return base_->fmap(f, t); }
  Elem bind(Elem n, Elem t, const std::vector<Elem>& f, Elem m) const override { return base_->bind(n, t, f, m); }
  Elem mu(Elem n, Elem tt) const override { return n == 2 && tt == 8 ? 0 : base_->mu(n, tt); }
  std::vector<Operation> operations() const override { return base_->operations(); }

 private:
  MonadPtr base_ = powerset_monad();
};

}  // namespace

TEST_CASE("algebra counts match independent counts") {
  for (Elem n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(enumerate_algebras(powerset_monad(), n).size() == count_lattices(n));
    CHECK(enumerate_algebras(instantiate("gset:Z2"), n).size() == count_cyclic_actions(n, 2));
    CHECK(enumerate_algebras(instantiate("gset:Z3"), n).size() == count_cyclic_actions(n, 3));
    CHECK(enumerate_algebras(instantiate("gset:S3"), n).size() == count_s3_actions(n));
    CHECK(enumerate_algebras(vecf2_monad(), n).size() == count_vector_spaces(n));
    CHECK(enumerate_algebras(maybe_monad(), n).size() == n);
  }
}

TEST_CASE("enumerated algebras are valid and pairwise distinct") {
  for (const auto& id : kMonads) {
    for (Elem n = 0; n <= 4; ++n) {
      std::set<std::vector<Elem>> tables;
      for (const auto& a : enumerate_algebras(instantiate(id), n)) {
        CHECK(validate_algebra(a).ok());
        CHECK(tables.insert(a.table()).second);
      }
    }
  }
}

TEST_CASE("catalogue monads satisfy the laws") {
  for (const auto& id : kMonads) {
    CAPTURE(id);
    CHECK(monad_law_spotcheck(*instantiate(id), {0, 1, 2}).ok());
  }
  CHECK_THROWS_AS(monad_law_spotcheck(*powerset_monad(), {3}), BoundError);
}

TEST_CASE("a corrupted multiplication is named") {
  const auto r = monad_law_spotcheck(BrokenPowerset{}, {0, 1, 2});
  CHECK_FALSE(r.ok());
  CHECK(r.mentions("left-unit"));
  CHECK(r.summary().find("broken at size 2, element 3") != std::string::npos);
}

TEST_CASE("registered morphisms satisfy the morphism laws") {
  const std::vector<std::tuple<std::string, std::string, std::string>> pairs{
      {"maybe", "maybe", "id"},       {"powerset", "powerset", "id"}, {"maybe", "powerset", "embed"},
      {"maybe", "vecF2", "embed"},    {"gset:Z2", "powerset", "forget"}, {"gset:S3", "vecF2", "forget"},
      {"gset:Z3", "maybe", "forget"}, {"gset:Z2", "gset:Z2", "id"}};
  for (const auto& [t, s, name] : pairs) {
    CAPTURE(t);
    CAPTURE(s);
    CHECK(monad_morphism_spotcheck(registry_morphism(name, instantiate(t), instantiate(s)), {0, 1, 2}).ok());
  }
  CHECK_THROWS_AS(registry_morphism("embed", powerset_monad(), maybe_monad()), DomainError);
  CHECK_THROWS_AS(registry_morphism("id", powerset_monad(), maybe_monad()), DomainError);
  CHECK_THROWS_AS(instantiate("gset:Z9"), DomainError);
}

TEST_CASE("congruence coequalizers are the finest congruence containing the pairs") {
  std::size_t cases = 0;
  for (const auto& id : kMonads) {
    const auto m = instantiate(id);
    for (Elem n = 1; n <= 4; ++n) {
      for (const auto& b : enumerate_algebras(m, n)) {
        const auto congruences = oracle::congruences(b);
        for (Elem i = 0; i < n; ++i) {
          for (Elem j = 0; j < n; ++j) {
            const auto f = free_extension(b, 1, {i});
            const auto g = free_extension(b, 1, {j});
            const auto q = congruence_coequalizer(b, f, g);
            const auto least = oracle::least_containing(congruences, i, j);
            CHECK(q.class_of == least);
            CHECK(validate_algebra(q.algebra).ok());
            CHECK(is_algebra_map(b, q.algebra, q.projection));
            ++cases;
          }
        }
      }
    }
  }
  CHECK(cases >= 500);
}

TEST_CASE("the identity morphism envelopes every algebra as itself") {
  for (const auto& id : {"maybe", "powerset", "gset:Z2"}) {
    const auto m = instantiate(id);
    const auto phi = registry_morphism("id", m, m);
    for (Elem n = 0; n <= 3; ++n)
      for (const auto& x : enumerate_algebras(m, n)) CHECK(envelope_finset(phi, x).size() == n);
  }
}

TEST_CASE("pointed sets envelope to the subsets avoiding the base point") {
  for (const auto& s : {"powerset", "vecF2"}) {
    const auto phi = registry_morphism("embed", maybe_monad(), instantiate(s));
    for (Elem n = 1; n <= 4; ++n) {
      for (const auto& x : enumerate_algebras(maybe_monad(), n)) {
        const auto e = envelope_finset(phi, x);
        CHECK(e.pair_target == (Elem{1} << n));
        CHECK(e.size() == (Elem{1} << (n - 1)));
      }
    }
  }
}

TEST_CASE("free algebras envelope to the free algebra on the generators") {
  const auto phi = registry_morphism("forget", instantiate("gset:Z2"), powerset_monad());
  for (Elem k = 0; k <= 2; ++k) CHECK(envelope_finset(phi, FinAlgebra::free(phi.t, k)).size() == (Elem{1} << k));
  const auto id = registry_morphism("id", powerset_monad(), powerset_monad());
  CHECK(envelope_finset(id, FinAlgebra::free(id.t, 2)).size() == 4);
}

TEST_CASE("bounds are enforced") {
  const auto phi = registry_morphism("id", vecf2_monad(), vecf2_monad());
  const auto x = enumerate_algebras(vecf2_monad(), 4).front();
  CHECK_THROWS_AS(envelope_finset(phi, x, Bounds{2, Elem{1} << 20}), BoundError);
  CHECK_NOTHROW(envelope_finset(phi, x));
}

TEST_CASE("probe: identity is not refuted, forgetting the Z2 action is") {
  const auto id = pbw_probe(registry_morphism("id", powerset_monad(), powerset_monad()), 3);
  CHECK_FALSE(id.refuted);
  CHECK_FALSE(id.witness);
  const auto forget = pbw_probe(registry_morphism("forget", instantiate("gset:Z2"), powerset_monad()), 3);
  REQUIRE(forget.refuted);
  REQUIRE(forget.witness);
  const auto& w = *forget.witness;
  CHECK(w.carrier == 2);
  CHECK(w.first_size != w.second_size);
  const auto phi = registry_morphism("forget", instantiate("gset:Z2"), powerset_monad());
  const auto a = FinAlgebra::from_table(phi.t, w.carrier, w.first);
  const auto b = FinAlgebra::from_table(phi.t, w.carrier, w.second);
  CHECK(validate_algebra(a).ok());
  CHECK(validate_algebra(b).ok());
  CHECK(envelope_finset(phi, a).size() == w.first_size);
  CHECK(envelope_finset(phi, b).size() == w.second_size);
}

TEST_CASE("probe: pointed sets into semilattices are not refuted at bound 3") {
  const auto r = pbw_probe(registry_morphism("embed", maybe_monad(), powerset_monad()), 3);
  CHECK_FALSE(r.refuted);
  CHECK(r.algebras == 0 + 1 + 2 + 3);
  REQUIRE(r.sizes.size() == 4);
  CHECK(r.sizes[0].empty());
  for (Elem n = 1; n <= 3; ++n) CHECK(r.sizes[n] == std::vector<Elem>{Elem{1} << (n - 1)});
}
