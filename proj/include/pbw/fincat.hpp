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

// Finite categories as explicit tables, together with functors, natural
// transformations and adjunctions between them. Everything here is
// immutable once built; all searches are exhaustive and deterministic.

#ifndef PBW_FINCAT_HPP_
#define PBW_FINCAT_HPP_

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pbw/error.hpp"

namespace pbw {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;
inline constexpr std::uint32_t kNone = UINT32_MAX;

/// Name-based description of a category, as it appears in instance files.
/// Nothing about it is checked; see validate_category.
struct CategoryTables {
  struct Arrow {
    std::string name, dom, cod;
  };
  struct Composite {
    std::string g, f, gf;  // gf = g o f
  };
  std::vector<std::string> objects;
  std::vector<Arrow> morphisms;
  std::vector<std::pair<std::string, std::string>> identity;  // object -> morphism
  std::vector<Composite> compose;
};

/// Tables whose identities are named "id_<object>", with every composite
/// that involves an identity filled in. `composites` supplies the rest.
CategoryTables with_identities(std::vector<std::string> objects,
                               std::vector<CategoryTables::Arrow> arrows,
                               std::vector<CategoryTables::Composite> composites);

class FinCategory {
 public:
  struct Morphism {
    std::string name;
    ObjId dom;
    ObjId cod;
  };

  // `compose` is a dense |mor| x |mor| table indexed [g * |mor| + f]; entries
  // for non-composable pairs must be kNone. Throws StructuralError when the
  // tables are malformed (sizes, ranges, identities with wrong ends, composites
  // with wrong ends). The category axioms are not checked here.
  FinCategory(std::string name, std::vector<std::string> objects,
              std::vector<Morphism> morphisms, std::vector<MorId> identity,
              std::vector<MorId> compose);

  // Resolves names; throws StructuralError listing every structural problem.
  static FinCategory from_tables(std::string name, const CategoryTables& tables);

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object_name(ObjId a) const { return objects_.at(a); }
  const Morphism& morphism(MorId f) const { return morphisms_.at(f); }
  const std::string& morphism_name(MorId f) const { return morphisms_.at(f).name; }
  ObjId dom(MorId f) const { return morphisms_.at(f).dom; }
  ObjId cod(MorId f) const { return morphisms_.at(f).cod; }
  MorId identity(ObjId a) const { return identity_.at(a); }
  bool is_identity(MorId f) const { return identity_.at(dom(f)) == f; }

  /// g o f. Throws DomainError unless cod f = dom g.
  MorId compose(MorId g, MorId f) const;
  /// Right-to-left composite of a path: compose({h, g, f}) = h o g o f.
  MorId compose(std::initializer_list<MorId> path) const;
  /// Raw table entry; kNone for non-composable pairs.
  MorId compose_entry(MorId g, MorId f) const { return compose_[g * morphisms_.size() + f]; }

  std::span<const MorId> hom(ObjId a, ObjId b) const;

  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<MorId> find_morphism(std::string_view name) const;

  /// Two-sided inverse if one exists.
  std::optional<MorId> inverse(MorId f) const;
  bool is_isomorphism(MorId f) const { return inverse(f).has_value(); }
  bool isomorphic(ObjId a, ObjId b) const;

  /// Table equality; the category name is not compared.
  bool same_tables(const FinCategory& other) const;

  /// The inputs that from_tables would accept for this category.
  CategoryTables to_tables() const;

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identity_;
  std::vector<MorId> compose_;
  std::vector<std::vector<MorId>> hom_;  // [a * |obj| + b]
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, MorId> morphism_index_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

bool same_category(const CatPtr& a, const CatPtr& b);

/// Full check of name-based tables: structural problems (dangling names,
/// duplicates, missing or ill-typed entries) are reported as structural
/// issues; if there are none, the category axioms are checked as well.
ValidationReport validate_category(const CategoryTables& tables);
/// Unit and associativity laws of an already-built category.
ValidationReport validate_category(const FinCategory& c);

struct FunctorData {
  CatPtr source;
  CatPtr target;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;

  ObjId obj(ObjId a) const { return obj_map[a]; }
  MorId mor(MorId f) const { return mor_map[f]; }
};

bool operator==(const FunctorData& a, const FunctorData& b);

FunctorData identity_functor(const CatPtr& c);
/// The functor sending every object to `b` and every morphism to its identity.
FunctorData constant_functor(const CatPtr& source, const CatPtr& target, ObjId b);
/// g o f. Throws StructuralError if f's target is not g's source.
FunctorData compose(const FunctorData& g, const FunctorData& f);

ValidationReport validate_functor(const FunctorData& f);

struct NatTransData {
  FunctorData source;
  FunctorData target;
  std::vector<MorId> components;

  MorId at(ObjId a) const { return components[a]; }
};

bool operator==(const NatTransData& a, const NatTransData& b);

NatTransData identity_nat(const FunctorData& f);
/// Vertical composite b . a (componentwise b_x o a_x).
NatTransData vcompose(const NatTransData& b, const NatTransData& a);
/// h a : h o F => h o G, components h(a_x).
NatTransData whisker_left(const FunctorData& h, const NatTransData& a);
/// a h : F o h => G o h, components a_{h(x)}.
NatTransData whisker_right(const NatTransData& a, const FunctorData& h);

ValidationReport validate_nat_trans(const NatTransData& t);

/// `left` is left adjoint to `right`; unit : Id => right o left on the
/// source of `left`, counit : left o right => Id on its target.
struct AdjunctionData {
  FunctorData left;
  FunctorData right;
  NatTransData unit;
  NatTransData counit;

  const CatPtr& lower() const { return left.source; }  // where `left` starts
  const CatPtr& upper() const { return left.target; }
};

AdjunctionData identity_adjunction(const CatPtr& c);

ValidationReport validate_adjunction(const AdjunctionData& adj);

/// g : left(a) -> b  gives  right(g) o unit_a : a -> right(b).
MorId transpose_right(const AdjunctionData& adj, ObjId a, MorId g);
/// f : a -> right(b) gives  counit_b o left(f) : left(a) -> b.
MorId transpose_left(const AdjunctionData& adj, ObjId b, MorId f);

/// Round-trips both transposes over every hom-set pair (a, b) and reports
/// any pair where they fail to be mutually inverse bijections.
ValidationReport check_hom_bijection(const AdjunctionData& adj);

struct Cocone {
  ObjId object;
  MorId map;
  friend bool operator==(const Cocone&, const Cocone&) = default;
};

/// Checks that (q, e) coequalizes f, g and that every other coequalizing
/// arrow out of cod f factors through e exactly once.
bool is_coequalizer(const FinCategory& c, MorId f, MorId g, Cocone candidate);

/// Least (object, morphism) pair that is a coequalizer of f and g, or none.
/// Throws DomainError if f and g are not parallel.
std::optional<Cocone> coequalizer(const FinCategory& c, MorId f, MorId g);

/// The unique k with k o e = h, if exactly one exists.
std::optional<MorId> unique_factorization(const FinCategory& c, MorId e, MorId h);

using FunctorVisitor = std::function<bool(const FunctorData&)>;  // false stops

/// Every functor source -> target, each once, in lexicographic order of
/// (obj_map, mor_map). Returns the number visited.
std::size_t enumerate_functors(const CatPtr& source, const CatPtr& target,
                               const FunctorVisitor& visit);
std::vector<FunctorData> all_functors(const CatPtr& source, const CatPtr& target);

using NatTransVisitor = std::function<bool(const NatTransData&)>;

/// Every natural transformation F => G, lexicographic in components. With
/// `invertible_only`, only those whose components are all isomorphisms.
std::size_t enumerate_nat_trans(const FunctorData& f, const FunctorData& g,
                                const NatTransVisitor& visit, bool invertible_only = false);
std::vector<NatTransData> all_nat_trans(const FunctorData& f, const FunctorData& g);

/// First natural isomorphism F => G in canonical order.
std::optional<NatTransData> natural_iso_search(const FunctorData& f, const FunctorData& g);

}  // namespace pbw

#endif  // PBW_FINCAT_HPP_
