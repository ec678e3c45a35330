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

#ifndef PBW_MONAD_HPP_
#define PBW_MONAD_HPP_

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "pbw/fincat.hpp"

namespace pbw {

struct MonadData {
  CatPtr base;
  FunctorData endo;
  NatTransData mu;   // endo o endo => endo
  NatTransData eta;  // Id => endo
};

ValidationReport validate_monad(const MonadData& m);

/// The identity monad on c.
MonadData identity_monad(const CatPtr& c);

/// Every monad on c (endofunctor, then unit, then multiplication, each in
/// canonical order). Returns the number visited.
std::size_t enumerate_monads(const CatPtr& c, const std::function<bool(const MonadData&)>& visit);

struct AlgebraObject {
  ObjId carrier;
  MorId structure;  // endo(carrier) -> carrier
  friend auto operator<=>(const AlgebraObject&, const AlgebraObject&) = default;
};

bool satisfies_algebra_laws(const MonadData& m, AlgebraObject x);

/// f : x.carrier -> y.carrier commutes with the structure maps.
bool is_algebra_map(const MonadData& m, AlgebraObject x, AlgebraObject y, MorId f);

/// All algebras, ordered by (carrier, structure).
std::vector<AlgebraObject> enumerate_algebras(const MonadData& m);

/// The Eilenberg-Moore category of a monad, materialized, with its
/// forgetful functor, the free functor and the free-forgetful adjunction.
class EMBundle {
 public:
  explicit EMBundle(MonadData m);

  const MonadData& monad() const { return monad_; }
  const CatPtr& em() const { return em_; }
  const std::vector<AlgebraObject>& algebras() const { return algebras_; }
  const AlgebraObject& algebra(ObjId a) const { return algebras_.at(a); }
  const FunctorData& pi() const { return pi_; }
  const FunctorData& rho() const { return rho_; }
  const AdjunctionData& adj() const { return adj_; }

  std::optional<ObjId> find_algebra(AlgebraObject x) const;
  std::optional<MorId> find_map(ObjId from, ObjId to, MorId base) const;
  /// As find_map but throws DomainError when the morphism is no algebra map.
  MorId map(ObjId from, ObjId to, MorId base) const;
  MorId underlying(MorId f) const { return pi_.mor(f); }

 private:
  MonadData monad_;
  std::vector<AlgebraObject> algebras_;
  std::map<AlgebraObject, ObjId> algebra_index_;
  std::map<std::tuple<ObjId, ObjId, MorId>, MorId> map_index_;
  CatPtr em_;
  FunctorData pi_;
  FunctorData rho_;
  AdjunctionData adj_;
};

/// Throws StructuralError if m is not a valid monad.
EMBundle em_category(const MonadData& m);

/// A parallel pair u, v : A -> B in the EM category with a common section
/// s : B -> A.
struct ReflexivePairIds {
  MorId u, v, section;
};

/// First reflexive pair (in canonical order) without a coequalizer.
std::optional<ReflexivePairIds> missing_reflexive_coequalizer(const EMBundle& b);
bool check_reflexive_coequalizers(const EMBundle& b);

}  // namespace pbw

#endif  // PBW_MONAD_HPP_
