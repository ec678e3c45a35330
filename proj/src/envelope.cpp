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

#include "pbw/envelope.hpp"

namespace pbw {

namespace {

AlgebraObject lift_along_right(const PsiMorphismData& p, AlgebraObject y) {
  const auto& F = p.adj.right;
  return {F.obj(y.carrier), p.lower()->compose(F.mor(y.structure), p.phi_F.at(y.carrier))};
}

ReflexivePair pair_for(const PsiMorphismData& p, AlgebraObject x) {
  const auto& c = *p.upper();
  const auto& G = p.adj.left;
  const auto& S = p.s.endo;
  const MorId u = c.compose(p.s.mu.at(G.obj(x.carrier)), S.mor(p.phi_G.at(x.carrier)));
  const MorId v = S.mor(G.mor(x.structure));
  const MorId section = S.mor(G.mor(p.t.eta.at(x.carrier)));
  return {u, v, section};
}

void require_valid(const PsiMorphismData& p) {
  auto report = validate_psi_morphism(p);
  if (!report.ok()) throw StructuralError("not a Psi-morphism: " + report.summary());
}

}  // namespace

AlgebraObject hat_phi_F(const PsiMorphismData& p, AlgebraObject y) {
  require_valid(p);
  if (!satisfies_algebra_laws(p.s, y))
    throw DomainError(p.upper()->morphism_name(y.structure) + " is not an S-algebra structure");
  return lift_along_right(p, y);
}

ReflexivePair reflexive_pair(const PsiMorphismData& p, AlgebraObject x) {
  if (!satisfies_algebra_laws(p.t, x))
    throw DomainError(p.lower()->morphism_name(x.structure) + " is not a T-algebra structure");
  return pair_for(p, x);
}

Envelope::Envelope(PsiMorphismData p)
    : p_((require_valid(p), std::move(p))), em_s_(p_.s), em_t_(p_.t) {
  for (const EMBundle* b : {&em_s_, &em_t_}) {
    if (auto missing = missing_reflexive_coequalizer(*b)) {
      const auto& c = *b->em();
      throw AssumptionError("the algebra category " + std::string(b == &em_s_ ? "of S" : "of T") +
                            " lacks reflexive coequalizers: no coequalizer for (" +
                            c.morphism_name(missing->u) + ", " + c.morphism_name(missing->v) + ")");
    }
  }

  const auto& s_em = *em_s_.em();
  const auto& t_em = *em_t_.em();
  const auto& G = p_.adj.left;
  const auto& F = p_.adj.right;

  hat_phi_F_ = FunctorData{em_s_.em(), em_t_.em(), {}, {}};
  for (const auto& y : em_s_.algebras()) {
    auto image = em_t_.find_algebra(lift_along_right(p_, y));
    if (!image) throw Error("lifted structure on F(" + p_.upper()->object_name(y.carrier) + ") is not a T-algebra");
    hat_phi_F_.obj_map.push_back(*image);
  }
  for (MorId h = 0; h < s_em.morphism_count(); ++h) {
    hat_phi_F_.mor_map.push_back(em_t_.map(hat_phi_F_.obj(s_em.dom(h)), hat_phi_F_.obj(s_em.cod(h)),
                                           F.mor(em_s_.underlying(h))));
  }

  const auto& rho_s = em_s_.rho();
  for (ObjId i = 0; i < em_t_.algebras().size(); ++i) {
    const auto& x = em_t_.algebra(i);
    EnvelopeWitness w{};
    w.algebra = i;
    w.pair = pair_for(p_, x);
    w.free_source = rho_s.obj(G.obj(p_.t.endo.obj(x.carrier)));
    w.free_target = rho_s.obj(G.obj(x.carrier));
    w.u = em_s_.map(w.free_source, w.free_target, w.pair.u);
    w.v = em_s_.map(w.free_source, w.free_target, w.pair.v);
    w.section = em_s_.map(w.free_target, w.free_source, w.pair.section);
    std::optional<Cocone> q;
    for (ObjId y = 0; y < p_.lower()->object_count() && !q; ++y) {
      if (em_t_.rho().obj(y) != i) continue;
      const MorId action = p_.upper()->compose(p_.s.mu.at(G.obj(y)), p_.s.endo.mor(p_.phi_G.at(y)));
      const ObjId target = rho_s.obj(G.obj(y));
      if (auto e = em_s_.find_map(w.free_target, target, action)) {
        if (is_coequalizer(s_em, w.u, w.v, {target, *e})) q = Cocone{target, *e};
      }
    }
    if (!q) q = coequalizer(s_em, w.u, w.v);
    if (!q)
      throw AssumptionError("no coequalizer in S-algebras for the reflexive pair of " +
                            t_em.object_name(i));
    w.coequalizer = *q;
    witnesses_.push_back(w);
  }

  hat_phi_G_ = FunctorData{em_t_.em(), em_s_.em(), {}, {}};
  for (const auto& w : witnesses_) hat_phi_G_.obj_map.push_back(w.coequalizer.object);
  for (MorId h = 0; h < t_em.morphism_count(); ++h) {
    const auto& from = witnesses_[t_em.dom(h)];
    const auto& to = witnesses_[t_em.cod(h)];
    const MorId free_h = rho_s.mor(G.mor(em_t_.underlying(h)));
    const MorId target = s_em.compose(to.coequalizer.map, free_h);
    auto k = unique_factorization(s_em, from.coequalizer.map, target);
    if (!k)
      throw Error("no unique factorization through the coequalizer for " + t_em.morphism_name(h));
    hat_phi_G_.mor_map.push_back(*k);
  }
}

AlgebraObject Envelope::hat_phi_G(AlgebraObject x) const {
  auto i = em_t_.find_algebra(x);
  if (!i) throw DomainError(p_.lower()->morphism_name(x.structure) + " is not a T-algebra structure");
  return em_s_.algebra(hat_phi_G_.obj(*i));
}

ValidationReport check_reflexive_pairs(const Envelope& e) {
  ValidationReport report;
  const auto& c = *e.psi().upper();
  const auto& t_em = *e.em_t().em();
  const auto& s_em = *e.em_s().em();
  for (const auto& w : e.witnesses()) {
    const std::string where = t_em.object_name(w.algebra);
    const MorId id = c.identity(c.cod(w.pair.u));
    if (c.compose(w.pair.u, w.pair.section) != id) report.law("u-section", "u o s != id at " + where);
    if (c.compose(w.pair.v, w.pair.section) != id) report.law("v-section", "v o s != id at " + where);
    if (e.em_s().underlying(w.u) != w.pair.u || e.em_s().underlying(w.v) != w.pair.v ||
        e.em_s().underlying(w.section) != w.pair.section)
      report.law("algebra-maps", "pair is not carried by S-algebra maps at " + where);
    if (s_em.compose(w.u, w.section) != s_em.identity(w.free_target) ||
        s_em.compose(w.v, w.section) != s_em.identity(w.free_target))
      report.law("reflexive", "pair has no common section in S-algebras at " + where);
  }
  return report;
}

ValidationReport check_hat_functors(const Envelope& e) {
  ValidationReport report;
  report.merge(validate_functor(e.hat_phi_F()), "lifted right adjoint");
  report.merge(validate_functor(e.hat_phi_G()), "enveloping functor");
  return report;
}

ValidationReport hat_adjunction_check(const Envelope& e) {
  ValidationReport report;
  const auto& p = e.psi();
  const auto& c = *p.upper();
  const auto& em_s = e.em_s();
  const auto& em_t = e.em_t();
  const auto& s_cat = *em_s.em();
  const auto& t_cat = *em_t.em();
  const auto& G = p.adj.left;
  const auto& Fh = e.hat_phi_F();
  const auto& Gh = e.hat_phi_G();

  // beta : x -> Fh(y) in em_t  |->  alpha : Gh(x) -> y in em_s
  auto forward = [&](ObjId x, ObjId y, MorId beta) -> std::optional<MorId> {
    const auto& w = e.witness(x);
    const auto& ya = em_s.algebra(y);
    const MorId beta_l = transpose_left(p.adj, ya.carrier, em_t.underlying(beta));
    const MorId h0 = c.compose(ya.structure, p.s.endo.mor(beta_l));
    auto h = em_s.find_map(w.free_target, y, h0);
    if (!h) return std::nullopt;
    if (s_cat.compose(*h, w.u) != s_cat.compose(*h, w.v)) return std::nullopt;
    return unique_factorization(s_cat, w.coequalizer.map, *h);
  };
  // alpha : Gh(x) -> y  |->  (alpha o e o eta_S(Gx))^R : x -> Fh(y)
  auto backward = [&](ObjId x, ObjId y, MorId alpha) -> std::optional<MorId> {
    const auto& w = e.witness(x);
    const auto& xa = em_t.algebra(x);
    const ObjId gx = G.obj(xa.carrier);
    const MorId through = c.compose({em_s.underlying(alpha), em_s.underlying(w.coequalizer.map),
                                     p.s.eta.at(gx)});
    const MorId b0 = transpose_right(p.adj, xa.carrier, through);
    return em_t.find_map(x, Fh.obj(y), b0);
  };

  for (ObjId x = 0; x < t_cat.object_count(); ++x) {
    for (ObjId y = 0; y < s_cat.object_count(); ++y) {
      const std::string where = "(" + t_cat.object_name(x) + ", " + s_cat.object_name(y) + ")";
      const auto betas = t_cat.hom(x, Fh.obj(y));
      const auto alphas = s_cat.hom(Gh.obj(x), y);
      if (betas.size() != alphas.size())
        report.law("hom-cardinality", where + ": " + std::to_string(alphas.size()) + " vs " +
                                          std::to_string(betas.size()));
      for (MorId beta : betas) {
        auto alpha = forward(x, y, beta);
        if (!alpha) {
          report.law("forward", where + ": " + t_cat.morphism_name(beta) + " does not factor");
          continue;
        }
        const auto& w = e.witness(x);
        const MorId recovered = c.compose({em_s.underlying(*alpha),
                                           em_s.underlying(w.coequalizer.map),
                                           p.s.eta.at(G.obj(em_t.algebra(x).carrier))});
        if (recovered != transpose_left(p.adj, em_s.algebra(y).carrier, em_t.underlying(beta)))
          report.law("transpose-agreement", where + " at " + t_cat.morphism_name(beta));
        auto back = backward(x, y, *alpha);
        if (!back || *back != beta)
          report.law("inverse", where + ": backward(forward(" + t_cat.morphism_name(beta) + ")) differs");
      }
      for (MorId alpha : alphas) {
        auto beta = backward(x, y, alpha);
        if (!beta) {
          report.law("backward", where + ": " + s_cat.morphism_name(alpha) + " has no T-algebra transpose");
          continue;
        }
        auto fwd = forward(x, y, *beta);
        if (!fwd || *fwd != alpha)
          report.law("inverse", where + ": forward(backward(" + s_cat.morphism_name(alpha) + ")) differs");
      }
    }
  }
  if (!report.ok()) return report;

  // Naturality in x: forward(beta o h) = forward(beta) o Gh(h).
  for (MorId h = 0; h < t_cat.morphism_count(); ++h) {
    const ObjId x0 = t_cat.dom(h);
    const ObjId x1 = t_cat.cod(h);
    for (ObjId y = 0; y < s_cat.object_count(); ++y) {
      for (MorId beta : t_cat.hom(x1, Fh.obj(y))) {
        auto lhs = forward(x0, y, t_cat.compose(beta, h));
        auto rhs = s_cat.compose(*forward(x1, y, beta), Gh.mor(h));
        if (!lhs || *lhs != rhs)
          report.law("natural-in-algebra", t_cat.morphism_name(h) + " with " + t_cat.morphism_name(beta));
      }
    }
  }
  // Naturality in y: forward(Fh(k) o beta) = k o forward(beta).
  for (MorId k = 0; k < s_cat.morphism_count(); ++k) {
    const ObjId y0 = s_cat.dom(k);
    const ObjId y1 = s_cat.cod(k);
    for (ObjId x = 0; x < t_cat.object_count(); ++x) {
      for (MorId beta : t_cat.hom(x, Fh.obj(y0))) {
        auto lhs = forward(x, y1, t_cat.compose(Fh.mor(k), beta));
        auto rhs = s_cat.compose(k, *forward(x, y0, beta));
        if (!lhs || *lhs != rhs)
          report.law("natural-in-target", s_cat.morphism_name(k) + " with " + t_cat.morphism_name(beta));
      }
    }
  }
  return report;
}

ValidationReport check_envelope_squares(const Envelope& e) {
  ValidationReport report;
  const auto& p = e.psi();
  const auto lhs = compose(e.em_t().pi(), e.hat_phi_F());
  const auto rhs = compose(p.adj.right, e.em_s().pi());
  const auto& s_cat = *e.em_s().em();
  for (ObjId y = 0; y < s_cat.object_count(); ++y)
    if (lhs.obj(y) != rhs.obj(y)) report.law("lift-square", "object " + s_cat.object_name(y));
  for (MorId h = 0; h < s_cat.morphism_count(); ++h)
    if (lhs.mor(h) != rhs.mor(h)) report.law("lift-square", "morphism " + s_cat.morphism_name(h));

  const auto top = compose(e.hat_phi_G(), e.em_t().rho());
  const auto bottom = compose(e.em_s().rho(), p.adj.left);
  const auto& d = *p.lower();
  for (ObjId x = 0; x < d.object_count(); ++x)
    if (top.obj(x) != bottom.obj(x)) report.law("free-square", "object " + d.object_name(x));
  for (MorId f = 0; f < d.morphism_count(); ++f)
    if (top.mor(f) != bottom.mor(f)) report.law("free-square", "morphism " + d.morphism_name(f));
  return report;
}

ValidationReport check_free_envelopes(const Envelope& e) {
  ValidationReport report;
  const auto& p = e.psi();
  const auto& c = *p.upper();
  const auto& d = *p.lower();
  const auto under = e.underlying_envelope();
  for (ObjId y = 0; y < d.object_count(); ++y) {
    const ObjId sgy = p.s.endo.obj(p.adj.left.obj(y));
    const ObjId env = under.obj(e.em_t().rho().obj(y));
    if (!c.isomorphic(env, sgy))
      report.law("free-envelope", "envelope of T" + d.object_name(y) + " is " + c.object_name(env) +
                                      ", not isomorphic to " + c.object_name(sgy));
  }
  return report;
}

}  // namespace pbw
