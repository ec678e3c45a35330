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

// Locally finite monads on finite sets. A finite set is its size n and its
// elements are 0..n-1; elements of T(n) are encoded as integers:
//
//   maybe     i < n is just i, n is nothing                 |T n| = n + 1
//   powerset  bitmask of the subset                         |T n| = 2^n
//   gset(G)   (g, i) is g * n + i                           |T n| = |G| n
//   vecF2     bitmask of the support                        |T n| = 2^n
//
// Algebras are finite and coequalizers of algebra maps are computed by
// congruence closure, so none of the Eilenberg-Moore categories here is
// ever materialized.

#ifndef PBW_FINSET_HPP_
#define PBW_FINSET_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbw/error.hpp"

namespace pbw::finset {

using Elem = std::uint64_t;

struct FinSetMap {
  Elem dom_size = 0;
  Elem cod_size = 0;
  std::vector<Elem> table;

  Elem operator()(Elem i) const { return table[i]; }
};

/// Throws StructuralError unless the table has dom_size entries below cod_size.
void validate_map(const FinSetMap& f);
FinSetMap identity_map(Elem n);
FinSetMap compose(const FinSetMap& g, const FinSetMap& f);

struct FinGroup {
  std::string name;
  std::vector<std::vector<std::size_t>> mult;  // element 0 is the unit

  std::size_t order() const { return mult.size(); }
};

/// Checks closure, unit 0, associativity and inverses. Throws StructuralError.
FinGroup make_group(std::string name, std::vector<std::vector<std::size_t>> mult);
/// "Z1", "Z2", "Z3", "S3". Throws DomainError for other names.
FinGroup named_group(std::string_view name);

/// An operation of the theory as a term in `arity` variables, i.e. an
/// element of T(arity); e.g. the binary join of powerset is {0, 1}.
struct Operation {
  std::string name;
  std::size_t arity;
  Elem term;
};

class CatalogueMonad {
 public:
  virtual ~CatalogueMonad() = default;

  virtual std::string id() const = 0;
  /// |T(n)|. Throws BoundError if it does not fit in 62 bits.
  virtual Elem size(Elem n) const = 0;
  virtual Elem eta(Elem n, Elem i) const = 0;
  /// T(f) applied to t in T(f.dom_size).
  virtual Elem fmap(const FinSetMap& f, Elem t) const = 0;
  /// mu o T(f) for f : n -> T(m) given as a table of elements of T(m); t in T(n).
  virtual Elem bind(Elem n, Elem t, const std::vector<Elem>& f, Elem m) const = 0;
  /// mu_n on tt in T(T(n)). Defaults to bind with the identity.
  virtual Elem mu(Elem n, Elem tt) const;
  virtual std::vector<Operation> operations() const = 0;
};

using MonadPtr = std::shared_ptr<const CatalogueMonad>;

MonadPtr maybe_monad();
MonadPtr powerset_monad();
MonadPtr gset_monad(FinGroup g);
MonadPtr vecf2_monad();

/// "maybe", "powerset", "vecF2", "gset:<group>" with <group> one of the named
/// groups. Throws DomainError for an unknown id.
MonadPtr instantiate(std::string_view id);

/// Unit and associativity laws elementwise at each size. Throws BoundError
/// when |T^3(n)| exceeds `limit`. Rules "left-unit", "right-unit",
/// "associativity", each naming the element.
ValidationReport monad_law_spotcheck(const CatalogueMonad& m, const std::vector<Elem>& sizes,
                                     Elem limit = Elem{1} << 20);

/// A T-algebra on 0..carrier-1: either an explicit structure table
/// T(carrier) -> carrier, or the free algebra T(k) with structure mu_k.
class FinAlgebra {
 public:
  static FinAlgebra from_table(MonadPtr m, Elem carrier, std::vector<Elem> structure);
  static FinAlgebra free(MonadPtr m, Elem k);

  const MonadPtr& monad() const { return m_; }
  Elem carrier() const { return carrier_; }
  bool is_free() const { return free_on_.has_value(); }
  std::optional<Elem> free_on() const { return free_on_; }
  /// Structure map on t in T(carrier).
  Elem act(Elem t) const;
  /// The structure applied to T(g)(term), for term in T(r) and g : r -> carrier.
  Elem evaluate(Elem r, Elem term, const std::vector<Elem>& g) const;
  /// Full structure table; throws BoundError if |T(carrier)| exceeds limit.
  std::vector<Elem> table(Elem limit = Elem{1} << 20) const;

 private:
  FinAlgebra(MonadPtr m, Elem carrier, std::vector<Elem> table, std::optional<Elem> free_on)
      : m_(std::move(m)), carrier_(carrier), table_(std::move(table)), free_on_(free_on) {}
  MonadPtr m_;
  Elem carrier_;
  std::vector<Elem> table_;
  std::optional<Elem> free_on_;
};

/// Unit and associativity of the structure. Elementwise when
/// |T(T(carrier))| <= 2^16, otherwise through the binary operations (only
/// possible for powerset and vecF2; other cases throw BoundError).
ValidationReport validate_algebra(const FinAlgebra& a);

/// f : a -> b commutes with the structures, checked elementwise on T(a).
bool is_algebra_map(const FinAlgebra& a, const FinAlgebra& b, const FinSetMap& f,
                    Elem limit = Elem{1} << 20);

/// The unique algebra map T(k) -> b extending g : k -> b.carrier.
FinSetMap free_extension(const FinAlgebra& b, Elem k, const std::vector<Elem>& g);

/// Every algebra on carrier n, in a fixed order, pairwise distinct tables.
std::vector<FinAlgebra> enumerate_algebras(const MonadPtr& m, Elem n);

struct Quotient {
  FinAlgebra algebra;
  FinSetMap projection;          // b.carrier -> algebra.carrier
  std::vector<Elem> class_of;    // same as projection.table
};

/// Quotient of b by the least congruence containing (f(a), g(a)) for every a,
/// with classes numbered by least member. f and g must be parallel algebra
/// maps into b. Throws DomainError if they are not parallel into b and
/// BoundError if |T(b)| exceeds limit.
Quotient congruence_coequalizer(const FinAlgebra& b, const FinSetMap& f, const FinSetMap& g,
                                Elem limit = Elem{1} << 20);

/// A natural transformation T => S between catalogue monads.
struct MonadMorphism {
  std::string name;
  MonadPtr t;
  MonadPtr s;
  /// Component at n applied to an element of T(n).
  Elem (*component)(const MonadMorphism&, Elem n, Elem t);

  Elem operator()(Elem n, Elem x) const { return component(*this, n, x); }
};

/// "id" (s = t), "embed" (maybe into powerset or vecF2: just i to the
/// singleton or basis vector, nothing to the empty set or zero), "forget"
/// (gset(G) into any s: (g, i) to eta_s(i)). Throws DomainError if the
/// name is unknown or does not apply to the pair.
MonadMorphism registry_morphism(std::string_view name, const MonadPtr& t, const MonadPtr& s);

/// Naturality on all maps between the given sizes, both morphism laws
/// elementwise. Rules "naturality", "mu-square", "eta-triangle".
ValidationReport monad_morphism_spotcheck(const MonadMorphism& phi, const std::vector<Elem>& sizes,
                                          Elem limit = Elem{1} << 16);

struct Bounds {
  Elem max_carrier = 64;
  Elem max_elements = Elem{1} << 20;
};

struct FinEnvelope {
  Elem carrier;           // the T-algebra's carrier x
  Elem pair_source;       // |S(T(x))|
  Elem pair_target;       // |S(x)|
  FinSetMap u, v;         // S(T x) -> S(x)
  FinSetMap section;      // S(x) -> S(T x)
  Quotient coequalizer;   // of u and v, in S-algebras
  Elem size() const { return coequalizer.algebra.carrier(); }
};

/// The enveloping S-algebra of the T-algebra x for the identity adjunction:
/// the coequalizer of u = mu_S o S(phi), v = S(lambda) on the free S-algebras.
/// Both section identities are asserted first (RelationError). Throws
/// BoundError when a carrier or |S(T(x))| exceeds the bounds.
FinEnvelope envelope_finset(const MonadMorphism& phi, const FinAlgebra& x, const Bounds& bounds = {});

struct ProbeWitness {
  Elem carrier;
  std::vector<Elem> first, second;  // structure tables
  Elem first_size, second_size;     // envelope sizes
};

struct ProbeReport {
  bool refuted = false;
  Elem bound = 0;
  std::optional<ProbeWitness> witness;
  std::size_t algebras = 0;                 // T-algebras examined
  std::vector<std::vector<Elem>> sizes;     // per carrier: distinct envelope sizes seen
};

/// Enumerates every T-algebra on carriers 0..bound and compares envelope
/// sizes per carrier. Never claims PBW: the verdict is refuted or not
/// refuted up to the bound.
ProbeReport pbw_probe(const MonadMorphism& phi, Elem bound, const Bounds& bounds = {});

}  // namespace pbw::finset

#endif  // PBW_FINSET_HPP_
