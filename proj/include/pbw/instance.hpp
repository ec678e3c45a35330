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

// Instance files. One JSON document with the top-level keys
//
//   categories     name -> {objects, morphisms: [[f, dom, cod]...],
//                           identity: {object: f}, compose: [[g, f, gf]...]}
//   functors       name -> {source, target, objects: {a: b}, morphisms: {f: g}}
//   nat_trans      name -> {source, target, components: {a: f}}
//   adjunctions    name -> {left, right, unit, counit}
//   monads         name -> {base, endo, mu, eta}
//   psi_morphisms  name -> {adjunction, s, t, phi_G, phi_F}
//
// Wherever a functor is expected, the value is a functor name, "id:<category>"
// or an array of those read as a composite, ["S", "G"] being S o G. Every
// other reference is a plain name in its own section. All keys are
// mandatory and unknown keys are rejected.
//
// The canonical text of an instance has sorted keys and two-space indent;
// saving a loaded canonical file reproduces it byte for byte.

#ifndef PBW_INSTANCE_HPP_
#define PBW_INSTANCE_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pbw/psimorph.hpp"

namespace pbw {

class Instance {
 public:
  /// Throws ParseError (with line and column) for malformed JSON and
  /// StructuralError (with the JSON path) for schema violations, dangling
  /// references and ill-shaped tables. Laws are not checked; see validate().
  static Instance parse(std::string_view text);
  /// parse() on a file's contents; IoError if it cannot be read.
  static Instance load(const std::string& path);

  const std::string& canonical() const { return canonical_; }
  void save(const std::string& path) const;

  const std::map<std::string, CatPtr>& categories() const { return categories_; }
  const std::map<std::string, FunctorData>& functors() const { return functors_; }
  const std::map<std::string, NatTransData>& nat_trans() const { return nat_trans_; }
  const std::map<std::string, AdjunctionData>& adjunctions() const { return adjunctions_; }
  const std::map<std::string, MonadData>& monads() const { return monads_; }
  const std::map<std::string, PsiMorphismData>& psi_morphisms() const { return psi_; }

  struct Item {
    std::string kind;  // "category", "functor", ...
    std::string name;
    ValidationReport report;
  };
  /// Every structure through its validator, sections in dependency order,
  /// names sorted within a section.
  std::vector<Item> validate() const;

 private:
  friend class InstanceLoader;
  std::string canonical_;
  std::map<std::string, CatPtr> categories_;
  std::map<std::string, FunctorData> functors_;
  std::map<std::string, NatTransData> nat_trans_;
  std::map<std::string, AdjunctionData> adjunctions_;
  std::map<std::string, MonadData> monads_;
  std::map<std::string, PsiMorphismData> psi_;
};

/// A functor reference: one name, "id:<category>", or a composite listed
/// outermost first.
using FunctorRef = std::vector<std::string>;

/// Builds instance text from in-memory structures. Names of objects and
/// morphisms are taken from the categories; the caller names everything
/// else. Nothing is checked until the text is parsed back.
class InstanceWriter {
 public:
  InstanceWriter();
  ~InstanceWriter();
  InstanceWriter(InstanceWriter&&) noexcept;
  InstanceWriter& operator=(InstanceWriter&&) noexcept;

  void category(const std::string& name, const FinCategory& c);
  void functor(const std::string& name, const std::string& source, const std::string& target,
               const FunctorData& f);
  void nat_trans(const std::string& name, const FunctorRef& source, const FunctorRef& target,
                 const NatTransData& t);
  void adjunction(const std::string& name, const FunctorRef& left, const FunctorRef& right,
                  const std::string& unit, const std::string& counit);
  void monad(const std::string& name, const std::string& base, const FunctorRef& endo,
             const std::string& mu, const std::string& eta);
  void psi_morphism(const std::string& name, const std::string& adjunction, const std::string& s,
                    const std::string& t, const std::string& phi_G, const std::string& phi_F);

  /// Writes the monad's endofunctor as functor `name` and its structure as
  /// nat_trans `name.mu` and `name.eta`, then the monad itself.
  void monad_data(const std::string& name, const std::string& base, const MonadData& m);

  /// Canonical text.
  std::string text() const;

 private:
  struct Doc;
  std::unique_ptr<Doc> doc_;
};

}  // namespace pbw

#endif  // PBW_INSTANCE_HPP_
