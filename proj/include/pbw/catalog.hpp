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

// Small named categories and helpers for building adjunctions between them.

#ifndef PBW_CATALOG_HPP_
#define PBW_CATALOG_HPP_

#include "pbw/fincat.hpp"

namespace pbw::catalog {

/// One object, one morphism.
CatPtr terminal();

/// Objects "0" < "1" < ... < "n-1"; the morphism i -> j is named "i<=j".
CatPtr chain(std::size_t n);

/// Thin category on `objects` where a -> b exists iff leq(a, b). Throws
/// StructuralError unless leq is reflexive and transitive.
CatPtr poset(std::string name, std::vector<std::string> objects,
             const std::function<bool(std::size_t, std::size_t)>& leq);

/// Objects a, b, c; u, v : a -> b; e : b -> c; w = e o u = e o v : a -> c.
CatPtr parallel_pair_with_coequalizer();

/// One object "*" whose endomorphisms form the group with the given
/// multiplication table (element 0 is the unit). Elements are named
/// `names[i]`.
CatPtr group(std::string name, std::vector<std::string> names,
             const std::vector<std::vector<std::size_t>>& mult);

/// Cyclic group of order n as a one-object category; element k is "g^k",
/// with "e" for the unit.
CatPtr cyclic_group(std::size_t n);

/// Two objects and an isomorphism i : 0 -> 1 with inverse j.
CatPtr walking_iso();

/// First (unit, counit) in canonical order making left -| right an
/// adjunction, if any.
std::optional<AdjunctionData> find_adjunction(const FunctorData& left, const FunctorData& right);

/// Functor from object/morphism names. Throws StructuralError for unknown
/// names or incomplete maps (the functor laws are not checked).
FunctorData functor_by_names(const CatPtr& source, const CatPtr& target,
                             const std::vector<std::pair<std::string, std::string>>& objects,
                             const std::vector<std::pair<std::string, std::string>>& morphisms);

/// Functor between thin categories, given on objects only.
FunctorData monotone_map(const CatPtr& source, const CatPtr& target, const std::vector<ObjId>& objects);

}  // namespace pbw::catalog

#endif  // PBW_CATALOG_HPP_
