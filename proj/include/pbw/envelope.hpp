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

// The functor induced on algebras by the right adjoint (lifting F) and its
// left adjoint, the enveloping functor, which sends a T-algebra x to the
// coequalizer in S-algebras of the reflexive pair
//
//   u = mu_S(Gx) o S(phi_G(x)),  v = SG(lambda_x) : SGTx => SGx
//
// with common section SG(eta_T(x)).

#ifndef PBW_ENVELOPE_HPP_
#define PBW_ENVELOPE_HPP_

#include "pbw/psimorph.hpp"

namespace pbw {

/// Base morphisms in the upper category C.
struct ReflexivePair {
  MorId u;        // SGTx -> SGx
  MorId v;        // SGTx -> SGx
  MorId section;  // SGx -> SGTx
};

/// (F y, F(lambda_y) o phi_F(y)). Throws StructuralError if p is not a valid
/// Psi-morphism and DomainError if y is not an S-algebra.
AlgebraObject hat_phi_F(const PsiMorphismData& p, AlgebraObject y);

/// Throws DomainError if x is not a T-algebra.
ReflexivePair reflexive_pair(const PsiMorphismData& p, AlgebraObject x);

struct EnvelopeWitness {
  ObjId algebra;       // the T-algebra, in em_t
  ReflexivePair pair;  // underlying morphisms
  ObjId free_source;   // free S-algebra on GTx, in em_s
  ObjId free_target;   // free S-algebra on Gx, in em_s
  MorId u, v, section; // the pair as S-algebra maps
  Cocone coequalizer;  // in em_s, out of free_target
};

class Envelope {
 public:
  /// Validates p, materializes both Eilenberg-Moore categories and builds
  /// both lifted functors. Throws StructuralError for an invalid p and
  /// AssumptionError if either algebra category lacks a reflexive
  /// coequalizer.
  ///
  /// Coequalizers are the least cocone in canonical order, except that a
  /// free T-algebra T y uses (rho(S)(G y), mu_S G y o S phi_G y) whenever that
  /// is a coequalizer, so the free square holds on the nose.
  explicit Envelope(PsiMorphismData p);

  const PsiMorphismData& psi() const { return p_; }
  const EMBundle& em_s() const { return em_s_; }
  const EMBundle& em_t() const { return em_t_; }
  const FunctorData& hat_phi_F() const { return hat_phi_F_; }  // em_s -> em_t
  const FunctorData& hat_phi_G() const { return hat_phi_G_; }  // em_t -> em_s
  const std::vector<EnvelopeWitness>& witnesses() const { return witnesses_; }
  const EnvelopeWitness& witness(ObjId x) const { return witnesses_.at(x); }

  /// The enveloping S-algebra of a T-algebra. Throws DomainError if x is
  /// not a T-algebra.
  AlgebraObject hat_phi_G(AlgebraObject x) const;

  /// pi(S) o hat_phi_G, the underlying-object functor em_t -> C.
  FunctorData underlying_envelope() const { return compose(em_s_.pi(), hat_phi_G_); }

 private:
  PsiMorphismData p_;
  EMBundle em_s_;
  EMBundle em_t_;
  FunctorData hat_phi_F_;
  FunctorData hat_phi_G_;
  std::vector<EnvelopeWitness> witnesses_;
};

/// For every T-algebra: both composites with the section are identities and
/// u, v, section are S-algebra maps between free algebras.
ValidationReport check_reflexive_pairs(const Envelope& e);

/// Both lifted functors satisfy the functor laws.
ValidationReport check_hat_functors(const Envelope& e);

/// The hom-set bijection between em_s(hat_phi_G x, y) and
/// em_t(x, hat_phi_F y): forward map factors lambda_y o S(beta^L) through the
/// coequalizer, backward map transposes alpha o e o eta_S. Checks equal
/// cardinalities, mutual inverses, agreement with the plain transpose, and
/// naturality in x and in y.
ValidationReport hat_adjunction_check(const Envelope& e);

/// pi(T) o hat_phi_F = F o pi(S) and hat_phi_G o rho(T) = rho(S) o G as tables.
/// Rules "lift-square" and "free-square".
ValidationReport check_envelope_squares(const Envelope& e);

/// The envelope of every free T-algebra T y has underlying object
/// isomorphic to S G y.
ValidationReport check_free_envelopes(const Envelope& e);

}  // namespace pbw

#endif  // PBW_ENVELOPE_HPP_
