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

// Morphisms of monads along an adjunction. The adjunction has its left
// adjoint G going from the category of T (the "lower" one, D) to the
// category of S (the "upper" one, C), and its right adjoint F back:
//
//   phi_G : G o T => S o G     (functors D -> C)
//   phi_F : T o F => F o S     (functors C -> D)

#ifndef PBW_PSIMORPH_HPP_
#define PBW_PSIMORPH_HPP_

#include "pbw/monad.hpp"

namespace pbw {

struct PsiMorphismData {
  AdjunctionData adj;
  MonadData s;  // on adj.upper()
  MonadData t;  // on adj.lower()
  NatTransData phi_G;
  NatTransData phi_F;

  const CatPtr& upper() const { return adj.upper(); }
  const CatPtr& lower() const { return adj.lower(); }
};

/// Typing, the square and triangle for phi_G, the square and triangle for
/// phi_F, and the compatibility square for every f : G x -> y. Report rules
/// are "phi_G-square", "phi_G-triangle", "phi_F-square", "phi_F-triangle",
/// "compatibility".
ValidationReport validate_psi_morphism(const PsiMorphismData& p);

/// For every x in D, y in C and f : G x -> y, evaluates the compatibility
/// square on the C side and its transposed form on the D side and compares
/// the verdicts. "verdict-mismatch" means the two disagree; "compatibility"
/// means both fail.
ValidationReport check_mate_compatibility(const PsiMorphismData& p);

/// The two commuting diagrams a natural transformation phi : T => S between
/// monads on one category must satisfy to be a morphism of monads.
ValidationReport validate_monad_morphism(const MonadData& s, const MonadData& t,
                                         const NatTransData& phi);

/// Embeds an ordinary morphism of monads T => S on one category as a
/// Psi-morphism over the identity adjunction. Throws StructuralError when
/// the monads live on different categories or phi is not T => S.
PsiMorphismData classical_embed(const MonadData& s, const MonadData& t, const NatTransData& phi);

/// Every valid pair (phi_G, phi_F) for the given adjunction and monads.
std::size_t enumerate_psi_morphisms(const AdjunctionData& adj, const MonadData& s,
                                    const MonadData& t,
                                    const std::function<bool(const PsiMorphismData&)>& visit);

}  // namespace pbw

#endif  // PBW_PSIMORPH_HPP_
