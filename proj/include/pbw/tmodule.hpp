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

// Right T-modules with values in C: functors P : D -> C with an action
// nu : P o T => P. Free modules (Q T, Q mu), the module S o G of a
// Psi-morphism, and the two deciders whose agreement is the PBW theorem:
// "S o G is a free module" versus "the underlying object of the envelope
// only depends on the underlying object of the algebra".

#ifndef PBW_TMODULE_HPP_
#define PBW_TMODULE_HPP_

#include "pbw/envelope.hpp"

namespace pbw {

struct TModuleData {
  FunctorData p;    // D -> C
  NatTransData nu;  // p o T => p
};

/// Action square nu o (nu T) = nu o (P mu) and unit triangle nu o (P eta) = id,
/// componentwise. Rules "action", "unit".
ValidationReport validate_tmodule(const TModuleData& m, const MonadData& t);

/// (P o T, P mu).
TModuleData free_module(const FunctorData& p, const MonadData& t);

/// S o G with action mu_S G o S phi_G. Throws StructuralError on invalid p.
TModuleData sg_module(const PsiMorphismData& p);

/// h : m.p => n.p commutes with the actions.
bool is_module_map(const TModuleData& m, const TModuleData& n, const NatTransData& h, const MonadData& t);

/// alpha : P => M.p  gives  nu_M o alpha T : P o T => M.p.
NatTransData transpose_module_left(const NatTransData& alpha, const TModuleData& m, const MonadData& t);
/// beta : (P T, P mu) -> M  gives  beta o P eta : P => M.p.
NatTransData transpose_module_right(const NatTransData& beta, const FunctorData& p, const MonadData& t);

/// Exhaustive check of the free-module hom bijection for one P and one M:
/// equal cardinalities, both round trips, and that every left transpose is
/// a module map.
ValidationReport check_module_hom_bijection(const FunctorData& p, const TModuleData& m, const MonadData& t);

/// Every module structure on every functor D -> C (in functor order, then
/// action order). Returns the number visited.
std::size_t enumerate_tmodules(const CatPtr& d, const CatPtr& c, const MonadData& t,
                               const std::function<bool(const TModuleData&)>& visit);

struct SearchStats {
  std::size_t functors = 0;       // candidate Q enumerated
  std::size_t candidates = 0;     // Q surviving the object prune
  std::size_t transformations = 0;  // natural isomorphisms examined
};

struct FreenessReport {
  bool free = false;
  std::optional<FunctorData> q;     // m is isomorphic to (Q T, Q mu)
  std::optional<NatTransData> iso;  // Q o T => m.p, a module isomorphism
  bool equal_to_free = false;       // m is literally (Q T, Q mu)
  SearchStats stats;
};

/// Searches all Q : D -> C and all natural isomorphisms Q T => m.p that are
/// module maps from the free module. The first witness in canonical order
/// is returned after independent re-validation.
FreenessReport freeness_check(const TModuleData& m, const MonadData& t);

/// Whether `iso` is a module isomorphism (Q T, Q mu) -> m.
bool is_free_witness(const TModuleData& m, const MonadData& t, const FunctorData& q, const NatTransData& iso);

enum class PbwMode { strict, up_to_iso };

struct PbwReport {
  bool pbw = false;
  PbwMode mode = PbwMode::up_to_iso;
  std::optional<FunctorData> q;      // D -> C
  std::optional<NatTransData> iso;   // Q o pi(T) => pi(S) o hat_phi_G; identity in strict mode
  /// Two T-algebras on one carrier whose envelopes have non-isomorphic
  /// (strict: different) underlying objects.
  std::optional<std::pair<ObjId, ObjId>> conflict;
  SearchStats stats;
};

/// Looks for Q with Q o pi(T) = pi(S) o hat_phi_G (strict) or naturally
/// isomorphic to it (up_to_iso).
PbwReport pbw_check(const Envelope& e, PbwMode mode = PbwMode::up_to_iso);

struct SplitCoequalizerWitness {
  AlgebraObject algebra;
  MorId alpha;    // Q lambda            : QTx  -> Qx
  MorId beta;     // Q eta_x             : Qx   -> QTx
  MorId gamma;    // Q mu_x              : QTTx -> QTx
  MorId delta;    // QT lambda           : QTTx -> QTx
  MorId epsilon;  // Q eta_Tx            : QTx  -> QTTx
};

/// Checks alpha gamma = alpha delta, alpha beta = id, gamma epsilon = id,
/// delta epsilon = beta alpha, that (Qx, alpha) is a coequalizer of gamma and
/// delta, and that the canonical coequalizer is isomorphic to it. Throws
/// RelationError naming the first relation that fails.
SplitCoequalizerWitness split_coequalizer_witness(const FunctorData& q, const MonadData& t,
                                                  AlgebraObject x);

struct HarnessReport {
  PbwReport pbw;
  FreenessReport freeness;
  bool agree = false;
  std::vector<SplitCoequalizerWitness> splits;
  std::vector<std::string> failures;  // split relations that failed

  bool ok() const { return agree && failures.empty(); }
};

/// Runs pbw_check (up to iso) and freeness_check(sg_module) independently,
/// compares the verdicts and, when free, builds the split coequalizer for
/// every T-algebra from the freeness witness.
HarnessReport pb3w_harness(const Envelope& e);

}  // namespace pbw

#endif  // PBW_TMODULE_HPP_
