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

// The bundled corpus of instance files.
//
//   identity.json              identity monad on chain2 over the identity adjunction
//   classical-<C>-S<i>-T<j>    every monad morphism T => S between monads on
//                              C in {chain2, P3}, over the identity adjunction
//   adjoint-<name>-S<i>-T<j>   every Psi-morphism over one of five fixed
//                              nonidentity adjunctions
//
// Monads are numbered in enumeration order. Pairs without any morphism
// produce no file.

#ifndef PBW_CORPUS_HPP_
#define PBW_CORPUS_HPP_

#include <string>
#include <vector>

#include "pbw/psimorph.hpp"

namespace pbw {

struct CorpusFile {
  std::string name;  // file name, sorted order is generation order
  std::string text;  // canonical instance text
  std::size_t psi_morphisms = 0;
};

struct NamedAdjunction {
  std::string name;
  AdjunctionData adj;
};

/// collapse (chain2 -> terminal), bottom (terminal -> chain2), galois
/// (chain3 -> chain2), cone (P3 -> terminal), retract (P3 -> chain2); the
/// left adjoint is listed first.
std::vector<NamedAdjunction> handcrafted_adjunctions();

std::vector<CorpusFile> builtin_corpus();

}  // namespace pbw

#endif  // PBW_CORPUS_HPP_
