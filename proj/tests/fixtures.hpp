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

#ifndef PBW_TESTS_FIXTURES_HPP_
#define PBW_TESTS_FIXTURES_HPP_

#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pbw/catalog.hpp"
#include "pbw/corpus.hpp"
#include "pbw/instance.hpp"
#include "pbw/monad.hpp"
#include "pbw/psimorph.hpp"

namespace fixture {

// u, v : a -> b with common section s, us = vs = id; no coequalizer of u, v.
inline pbw::CatPtr walking_reflexive_pair() {
  auto t = pbw::with_identities(
      {"a", "b"}, {{"u", "a", "b"}, {"v", "a", "b"}, {"s", "b", "a"}, {"su", "a", "a"}, {"sv", "a", "a"}},
      {{"u", "s", "id_b"}, {"v", "s", "id_b"},
       {"s", "u", "su"}, {"s", "v", "sv"},
       {"u", "su", "u"}, {"u", "sv", "v"}, {"v", "su", "u"}, {"v", "sv", "v"},
       {"su", "s", "s"}, {"sv", "s", "s"},
       {"su", "su", "su"}, {"su", "sv", "sv"}, {"sv", "su", "su"}, {"sv", "sv", "sv"}});
  return std::make_shared<const pbw::FinCategory>(pbw::FinCategory::from_tables("refl", t));
}

inline std::vector<pbw::MonadData> monads_on(const pbw::CatPtr& c) {
  std::vector<pbw::MonadData> out;
  pbw::enumerate_monads(c, [&](const pbw::MonadData& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

// Every Psi-morphism of the bundled corpus, with its file name.
struct CorpusPsi {
  std::string file;
  std::string name;
  pbw::PsiMorphismData psi;
};

inline std::vector<CorpusPsi> corpus_psis() {
  std::vector<CorpusPsi> out;
  for (const auto& f : pbw::builtin_corpus()) {
    auto inst = pbw::Instance::parse(f.text);
    for (const auto& [n, p] : inst.psi_morphisms()) out.push_back({f.name, n, p});
  }
  return out;
}

// Every Psi-morphism over the identity adjunction on categories with
// parallel morphisms, where components have alternatives to corrupt to.
inline std::vector<CorpusPsi> nonthin_psis() {
  std::vector<CorpusPsi> out;
  for (const auto& c : {pbw::catalog::cyclic_group(2), pbw::catalog::walking_iso(),
                        pbw::catalog::parallel_pair_with_coequalizer()}) {
    const auto adj = pbw::identity_adjunction(c);
    const auto ms = monads_on(c);
    for (const auto& s : ms)
      for (const auto& t : ms)
        pbw::enumerate_psi_morphisms(adj, s, t, [&](const pbw::PsiMorphismData& p) {
          out.push_back({c->name(), "psi" + std::to_string(out.size()), p});
          return true;
        });
  }
  return out;
}

// A fresh directory under the system temp path, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("pbw-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::string write(const std::string& name, const std::string& text) const {
    const auto file = path_ / name;
    std::ofstream(file, std::ios::binary) << text;
    return file.string();
  }

  // Every bundled corpus file; returns the directory.
  std::string write_corpus() const {
    for (const auto& f : pbw::builtin_corpus()) write(f.name, f.text);
    return path_.string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace fixture

#endif  // PBW_TESTS_FIXTURES_HPP_
