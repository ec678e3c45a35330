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

#include "pbw/corpus.hpp"

#include <cstdio>

#include "pbw/catalog.hpp"
#include "pbw/instance.hpp"

namespace pbw {

namespace {

std::vector<MonadData> monads_on(const CatPtr& c) {
  std::vector<MonadData> out;
  enumerate_monads(c, [&](const MonadData& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::string two_digits(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02zu", i);
  return buf;
}

std::string pair_tag(std::size_t i, std::size_t j) { return "S" + two_digits(i) + "-T" + two_digits(j); }

AdjunctionData adjoint_pair(const FunctorData& g, const FunctorData& f, const char* name) {
  auto adj = catalog::find_adjunction(g, f);
  if (!adj) throw StructuralError(std::string("corpus adjunction '") + name + "' does not exist");
  return *adj;
}

void identity_adjunction_entries(InstanceWriter& w, const std::string& c, const CatPtr& cat) {
  const auto id = identity_nat(identity_functor(cat));
  w.nat_trans("adj.unit", {"id:" + c}, {"id:" + c}, id);
  w.nat_trans("adj.counit", {"id:" + c}, {"id:" + c}, id);
  w.adjunction("adj", {"id:" + c}, {"id:" + c}, "adj.unit", "adj.counit");
}

CorpusFile classical_file(const CatPtr& cat, std::size_t i, const MonadData& s, std::size_t j,
                          const MonadData& t, const std::vector<NatTransData>& morphisms) {
  const std::string c = cat->name();
  InstanceWriter w;
  w.category(c, *cat);
  w.monad_data("S", c, s);
  w.monad_data("T", c, t);
  identity_adjunction_entries(w, c, cat);
  for (std::size_t k = 0; k < morphisms.size(); ++k) {
    const std::string phi = "phi" + two_digits(k);
    w.nat_trans(phi, {"T"}, {"S"}, morphisms[k]);
    w.psi_morphism("psi" + two_digits(k), "adj", "S", "T", phi, phi);
  }
  return {"classical-" + c + "-" + pair_tag(i, j) + ".json", w.text(), morphisms.size()};
}

CorpusFile adjoint_file(const NamedAdjunction& na, std::size_t i, const MonadData& s, std::size_t j,
                        const MonadData& t, const std::vector<PsiMorphismData>& psis) {
  const auto& adj = na.adj;
  const std::string d = adj.lower()->name();
  const std::string c = adj.upper()->name();
  InstanceWriter w;
  w.category(d, *adj.lower());
  w.category(c, *adj.upper());
  w.functor("G", d, c, adj.left);
  w.functor("F", c, d, adj.right);
  w.nat_trans("adj.unit", {"id:" + d}, {"F", "G"}, adj.unit);
  w.nat_trans("adj.counit", {"G", "F"}, {"id:" + c}, adj.counit);
  w.adjunction("adj", {"G"}, {"F"}, "adj.unit", "adj.counit");
  w.monad_data("S", c, s);
  w.monad_data("T", d, t);
  for (std::size_t k = 0; k < psis.size(); ++k) {
    const std::string psi = "psi" + two_digits(k);
    w.nat_trans(psi + ".phi_G", {"G", "T"}, {"S", "G"}, psis[k].phi_G);
    w.nat_trans(psi + ".phi_F", {"T", "F"}, {"F", "S"}, psis[k].phi_F);
    w.psi_morphism(psi, "adj", "S", "T", psi + ".phi_G", psi + ".phi_F");
  }
  return {"adjoint-" + na.name + "-" + pair_tag(i, j) + ".json", w.text(), psis.size()};
}

CorpusFile identity_file() {
  const auto cat = catalog::chain(2);
  const std::string c = cat->name();
  InstanceWriter w;
  w.category(c, *cat);
  w.monad_data("S", c, identity_monad(cat));
  identity_adjunction_entries(w, c, cat);
  w.nat_trans("phi", {"S"}, {"S"}, identity_nat(identity_functor(cat)));
  w.psi_morphism("psi", "adj", "S", "S", "phi", "phi");
  return {"identity.json", w.text(), 1};
}

}  // namespace

std::vector<NamedAdjunction> handcrafted_adjunctions() {
  using catalog::functor_by_names;
  using catalog::monotone_map;
  const auto one = catalog::terminal();
  const auto c2 = catalog::chain(2);
  const auto c3 = catalog::chain(3);
  const auto p3 = catalog::parallel_pair_with_coequalizer();
  std::vector<NamedAdjunction> out;
  out.push_back({"collapse", adjoint_pair(constant_functor(c2, one, 0), constant_functor(one, c2, 1), "collapse")});
  out.push_back({"bottom", adjoint_pair(constant_functor(one, c2, 0), constant_functor(c2, one, 0), "bottom")});
  out.push_back({"galois", adjoint_pair(monotone_map(c3, c2, {0, 1, 1}), monotone_map(c2, c3, {0, 2}), "galois")});
  out.push_back({"cone", adjoint_pair(constant_functor(p3, one, 0), constant_functor(one, p3, 2), "cone")});
  const auto g = functor_by_names(
      p3, c2, {{"a", "0"}, {"b", "1"}, {"c", "1"}},
      {{"id_a", "id_0"}, {"id_b", "id_1"}, {"id_c", "id_1"}, {"u", "0<=1"}, {"v", "0<=1"}, {"e", "id_1"},
       {"w", "0<=1"}});
  const auto f = functor_by_names(c2, p3, {{"0", "a"}, {"1", "c"}},
                                  {{"id_0", "id_a"}, {"id_1", "id_c"}, {"0<=1", "w"}});
  out.push_back({"retract", adjoint_pair(g, f, "retract")});
  return out;
}

std::vector<CorpusFile> builtin_corpus() {
  std::vector<CorpusFile> files;
  files.push_back(identity_file());
  for (const auto& cat : {catalog::chain(2), catalog::parallel_pair_with_coequalizer()}) {
    const auto ms = monads_on(cat);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = 0; j < ms.size(); ++j) {
        std::vector<NatTransData> morphisms;
        for (const auto& phi : all_nat_trans(ms[j].endo, ms[i].endo))
          if (validate_monad_morphism(ms[i], ms[j], phi).ok()) morphisms.push_back(phi);
        if (!morphisms.empty()) files.push_back(classical_file(cat, i, ms[i], j, ms[j], morphisms));
      }
    }
  }
  for (const auto& na : handcrafted_adjunctions()) {
    const auto ss = monads_on(na.adj.upper());
    const auto ts = monads_on(na.adj.lower());
    for (std::size_t i = 0; i < ss.size(); ++i) {
      for (std::size_t j = 0; j < ts.size(); ++j) {
        std::vector<PsiMorphismData> psis;
        enumerate_psi_morphisms(na.adj, ss[i], ts[j], [&](const PsiMorphismData& p) {
          psis.push_back(p);
          return true;
        });
        if (!psis.empty()) files.push_back(adjoint_file(na, i, ss[i], j, ts[j], psis));
      }
    }
  }
  return files;
}

}  // namespace pbw
