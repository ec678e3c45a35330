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

#include "pbw/psimorph.hpp"

namespace pbw {

namespace {

bool phi_G_square(const PsiMorphismData& p, ObjId x) {
  const auto& c = *p.upper();
  const auto& G = p.adj.left;
  const ObjId gx = G.obj(x);
  const MorId lhs = c.compose(p.phi_G.at(x), G.mor(p.t.mu.at(x)));
  const MorId rhs = c.compose({p.s.mu.at(gx), p.s.endo.mor(p.phi_G.at(x)), p.phi_G.at(p.t.endo.obj(x))});
  return lhs == rhs;
}

bool phi_G_triangle(const PsiMorphismData& p, ObjId x) {
  const auto& c = *p.upper();
  const auto& G = p.adj.left;
  return c.compose(p.phi_G.at(x), G.mor(p.t.eta.at(x))) == p.s.eta.at(G.obj(x));
}

bool phi_F_square(const PsiMorphismData& p, ObjId y) {
  const auto& d = *p.lower();
  const auto& F = p.adj.right;
  const MorId lhs = d.compose(p.phi_F.at(y), p.t.mu.at(F.obj(y)));
  const MorId rhs = d.compose({F.mor(p.s.mu.at(y)), p.phi_F.at(p.s.endo.obj(y)), p.t.endo.mor(p.phi_F.at(y))});
  return lhs == rhs;
}

bool phi_F_triangle(const PsiMorphismData& p, ObjId y) {
  const auto& d = *p.lower();
  const auto& F = p.adj.right;
  return d.compose(p.phi_F.at(y), p.t.eta.at(F.obj(y))) == F.mor(p.s.eta.at(y));
}

// phi_F(y)^L o GT(f^R) = S(f) o phi_G(x), as maps GTx -> Sy in C.
bool compatibility_upper(const PsiMorphismData& p, ObjId x, ObjId y, MorId f) {
  const auto& c = *p.upper();
  const MorId f_r = transpose_right(p.adj, x, f);
  const MorId phi_F_l = transpose_left(p.adj, p.s.endo.obj(y), p.phi_F.at(y));
  const MorId lhs = c.compose(phi_F_l, p.adj.left.mor(p.t.endo.mor(f_r)));
  const MorId rhs = c.compose(p.s.endo.mor(f), p.phi_G.at(x));
  return lhs == rhs;
}

// phi_F(y) o T(f^R) = FS(f) o phi_G(x)^R, as maps Tx -> FSy in D.
bool compatibility_lower(const PsiMorphismData& p, ObjId x, ObjId y, MorId f) {
  const auto& d = *p.lower();
  const MorId f_r = transpose_right(p.adj, x, f);
  const MorId phi_G_r = transpose_right(p.adj, p.t.endo.obj(x), p.phi_G.at(x));
  const MorId lhs = d.compose(p.phi_F.at(y), p.t.endo.mor(f_r));
  const MorId rhs = d.compose(p.adj.right.mor(p.s.endo.mor(f)), phi_G_r);
  return lhs == rhs;
}

ValidationReport check_typing(const PsiMorphismData& p) {
  ValidationReport report;
  report.merge(validate_adjunction(p.adj), "adjunction");
  report.merge(validate_monad(p.s), "monad S");
  report.merge(validate_monad(p.t), "monad T");
  if (!report.ok()) return report;
  if (!same_category(p.s.base, p.upper()))
    report.structural("s-base", "S does not live on the target of the left adjoint");
  if (!same_category(p.t.base, p.lower()))
    report.structural("t-base", "T does not live on the source of the left adjoint");
  if (!report.ok()) return report;
  const auto& G = p.adj.left;
  const auto& F = p.adj.right;
  if (!(p.phi_G.source == compose(G, p.t.endo)) || !(p.phi_G.target == compose(p.s.endo, G)))
    report.structural("phi_G-shape", "phi_G is not G o T => S o G");
  if (!(p.phi_F.source == compose(p.t.endo, F)) || !(p.phi_F.target == compose(F, p.s.endo)))
    report.structural("phi_F-shape", "phi_F is not T o F => F o S");
  if (!report.ok()) return report;
  report.merge(validate_nat_trans(p.phi_G), "phi_G");
  report.merge(validate_nat_trans(p.phi_F), "phi_F");
  return report;
}

}  // namespace

ValidationReport validate_psi_morphism(const PsiMorphismData& p) {
  auto report = check_typing(p);
  if (!report.ok()) return report;
  const auto& c = *p.upper();
  const auto& d = *p.lower();
  for (ObjId x = 0; x < d.object_count(); ++x) {
    if (!phi_G_square(p, x)) report.law("phi_G-square", "fails at " + d.object_name(x));
    if (!phi_G_triangle(p, x)) report.law("phi_G-triangle", "fails at " + d.object_name(x));
  }
  for (ObjId y = 0; y < c.object_count(); ++y) {
    if (!phi_F_square(p, y)) report.law("phi_F-square", "fails at " + c.object_name(y));
    if (!phi_F_triangle(p, y)) report.law("phi_F-triangle", "fails at " + c.object_name(y));
  }
  for (ObjId x = 0; x < d.object_count(); ++x) {
    for (ObjId y = 0; y < c.object_count(); ++y) {
      for (MorId f : c.hom(p.adj.left.obj(x), y)) {
        if (!compatibility_upper(p, x, y, f))
          report.law("compatibility", "square fails for " + c.morphism_name(f) + " (x = " +
                                          d.object_name(x) + ")");
      }
    }
  }
  return report;
}

ValidationReport check_mate_compatibility(const PsiMorphismData& p) {
  auto report = check_typing(p);
  if (!report.ok()) return report;
  const auto& c = *p.upper();
  const auto& d = *p.lower();
  for (ObjId x = 0; x < d.object_count(); ++x) {
    for (ObjId y = 0; y < c.object_count(); ++y) {
      for (MorId f : c.hom(p.adj.left.obj(x), y)) {
        const bool upper = compatibility_upper(p, x, y, f);
        const bool lower = compatibility_lower(p, x, y, f);
        const std::string where = c.morphism_name(f) + " (x = " + d.object_name(x) + ")";
        if (upper != lower)
          report.law("verdict-mismatch", where + (upper ? ": only the upper square holds"
                                                        : ": only the lower square holds"));
        else if (!upper)
          report.law("compatibility", "both squares fail for " + where);
      }
    }
  }
  return report;
}

ValidationReport validate_monad_morphism(const MonadData& s, const MonadData& t,
                                         const NatTransData& phi) {
  ValidationReport report;
  if (!same_category(s.base, t.base)) {
    report.structural("base-mismatch", "monads live on different categories");
    return report;
  }
  if (!(phi.source == t.endo) || !(phi.target == s.endo)) {
    report.structural("phi-shape", "transformation is not T => S");
    return report;
  }
  report.merge(validate_nat_trans(phi), "phi");
  if (!report.ok()) return report;
  const auto& c = *s.base;
  for (ObjId x = 0; x < c.object_count(); ++x) {
    const MorId lhs = c.compose(phi.at(x), t.mu.at(x));
    const MorId rhs = c.compose({s.mu.at(x), s.endo.mor(phi.at(x)), phi.at(t.endo.obj(x))});
    if (lhs != rhs) report.law("mu-square", "fails at " + c.object_name(x));
    if (c.compose(phi.at(x), t.eta.at(x)) != s.eta.at(x))
      report.law("eta-triangle", "fails at " + c.object_name(x));
  }
  return report;
}

PsiMorphismData classical_embed(const MonadData& s, const MonadData& t, const NatTransData& phi) {
  if (!same_category(s.base, t.base))
    throw StructuralError("classical embedding needs monads on one category");
  if (!(phi.source == t.endo) || !(phi.target == s.endo))
    throw StructuralError("classical embedding needs a transformation T => S");
  return PsiMorphismData{identity_adjunction(s.base), s, t, phi, phi};
}

std::size_t enumerate_psi_morphisms(const AdjunctionData& adj, const MonadData& s,
                                    const MonadData& t,
                                    const std::function<bool(const PsiMorphismData&)>& visit) {
  const auto& G = adj.left;
  const auto& F = adj.right;
  PsiMorphismData p{adj, s, t, {}, {}};
  const auto& c = *adj.upper();
  const auto& d = *adj.lower();

  std::vector<NatTransData> good_G;
  enumerate_nat_trans(compose(G, t.endo), compose(s.endo, G), [&](const NatTransData& phi) {
    p.phi_G = phi;
    for (ObjId x = 0; x < d.object_count(); ++x)
      if (!phi_G_square(p, x) || !phi_G_triangle(p, x)) return true;
    good_G.push_back(phi);
    return true;
  });
  std::vector<NatTransData> good_F;
  enumerate_nat_trans(compose(t.endo, F), compose(F, s.endo), [&](const NatTransData& phi) {
    p.phi_F = phi;
    for (ObjId y = 0; y < c.object_count(); ++y)
      if (!phi_F_square(p, y) || !phi_F_triangle(p, y)) return true;
    good_F.push_back(phi);
    return true;
  });

  std::size_t count = 0;
  for (const auto& pg : good_G) {
    for (const auto& pf : good_F) {
      p.phi_G = pg;
      p.phi_F = pf;
      bool ok = true;
      for (ObjId x = 0; x < d.object_count() && ok; ++x)
        for (ObjId y = 0; y < c.object_count() && ok; ++y)
          for (MorId f : c.hom(G.obj(x), y))
            if (!compatibility_upper(p, x, y, f)) {
              ok = false;
              break;
            }
      if (!ok) continue;
      ++count;
      if (!visit(p)) return count;
    }
  }
  return count;
}

}  // namespace pbw
