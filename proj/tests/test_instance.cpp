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

#include <fstream>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "pbw/instance.hpp"

using namespace pbw;
using json = nlohmann::json;

namespace {

std::string identity_text() {
  for (const auto& f : builtin_corpus())
    if (f.name == "identity.json") return f.text;
  FAIL("identity.json missing from the corpus");
  return {};
}

std::string mutate(const std::string& text, const std::function<void(json&)>& edit) {
  auto doc = json::parse(text);
  edit(doc);
  return doc.dump(2) + "\n";
}

std::string error_of(const std::string& text) {
  try {
    Instance::parse(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("corpus files round-trip byte for byte") {
  const auto corpus = builtin_corpus();
  CHECK(corpus.size() == 28);
  fixture::TempDir dir;
  for (const auto& f : corpus) {
    CAPTURE(f.name);
    const auto inst = Instance::parse(f.text);
    CHECK(inst.canonical() == f.text);
    CHECK(inst.psi_morphisms().size() == f.psi_morphisms);
    const auto path = (dir.path() / f.name).string();
    inst.save(path);
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == f.text);
    CHECK(Instance::load(path).canonical() == f.text);
  }
}

TEST_CASE("key order and whitespace do not matter") {
  const auto text = identity_text();
  const auto compact = json::parse(text).dump();
  CHECK(Instance::parse(compact).canonical() == text);
}

TEST_CASE("every corpus structure passes its validator") {
  for (const auto& f : builtin_corpus()) {
    CAPTURE(f.name);
    for (const auto& item : Instance::parse(f.text).validate()) {
      CAPTURE(item.name);
      CHECK(item.report.ok());
    }
  }
}

TEST_CASE("writer output loads back to the same structures") {
  const auto inst = Instance::parse(identity_text());
  InstanceWriter w;
  for (const auto& [name, c] : inst.categories()) w.category(name, *c);
  for (const auto& [name, m] : inst.monads()) {
    const auto base = m.base->name();
    w.monad_data(name, base, m);
  }
  const auto back = Instance::parse(w.text());
  REQUIRE(back.monads().size() == inst.monads().size());
  for (const auto& [name, m] : inst.monads()) {
    const auto& n = back.monads().at(name);
    CHECK(n.endo == m.endo);
    CHECK(n.mu.components == m.mu.components);
    CHECK(n.eta.components == m.eta.components);
  }
}

TEST_CASE("malformed JSON reports line and column") {
  const auto err = error_of("{\n  \"categories\": {,\n}");
  CHECK(err.find("line 2, column 18") != std::string::npos);
  CHECK_THROWS_AS(Instance::parse("[1, 2"), ParseError);
  CHECK_THROWS_AS(Instance::load("/nonexistent/pbw.json"), IoError);
}

TEST_CASE("schema violations name the JSON path") {
  const auto text = identity_text();
  SUBCASE("unknown key") {
    const auto bad = mutate(text, [](json& d) { d["functors"].begin()->emplace("extra", 1); });
    CHECK_THROWS_AS(Instance::parse(bad), StructuralError);
    CHECK(error_of(bad).find("unknown key 'extra'") != std::string::npos);
  }
  SUBCASE("missing section") {
    const auto bad = mutate(text, [](json& d) { d.erase("monads"); });
    CHECK(error_of(bad).find("missing key 'monads'") != std::string::npos);
  }
  SUBCASE("dangling monad reference") {
    const auto bad = mutate(text, [](json& d) { d["psi_morphisms"]["psi"]["s"] = "nope"; });
    CHECK(error_of(bad).find("/psi_morphisms/psi/s: unknown monad 'nope'") != std::string::npos);
  }
  SUBCASE("dangling morphism in a component table") {
    const auto bad = mutate(text, [](json& d) {
      auto& comps = d["nat_trans"].begin().value()["components"];
      comps.begin().value() = "ghost";
    });
    CHECK(error_of(bad).find("unknown morphism 'ghost'") != std::string::npos);
  }
  SUBCASE("partial object map") {
    const auto bad = mutate(text, [](json& d) { d["functors"].begin().value()["objects"].erase("0"); });
    CHECK(error_of(bad).find("object map is not total") != std::string::npos);
  }
  SUBCASE("malformed category table") {
    const auto bad = mutate(text, [](json& d) { d["categories"]["chain2"]["compose"].erase(0); });
    CHECK_THROWS_AS(Instance::parse(bad), StructuralError);
  }
}

TEST_CASE("law failures survive loading and surface in validate") {
  const auto z3 = catalog::cyclic_group(3);
  auto t = identity_monad(z3);
  t.mu.components[0] = *z3->find_morphism("g");
  InstanceWriter w;
  w.category("Z3", *z3);
  w.monad_data("T", "Z3", t);
  const auto inst = Instance::parse(w.text());
  bool named = false;
  for (const auto& item : inst.validate())
    if (item.kind == "monad") named = item.report.mentions("left-unit") || item.report.mentions("right-unit");
  CHECK(named);
}
