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

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "pbw/run.hpp"

using namespace pbw;
using json = nlohmann::json;

namespace {

RunConfig fincat(const std::string& input, Suite suite) {
  RunConfig c;
  c.input = input;
  c.suite = suite;
  return c;
}

RunConfig finset(const std::string& t, const std::string& s, const std::string& morphism, Suite suite) {
  RunConfig c;
  c.backend = Backend::finset;
  c.t = t;
  c.s = s;
  c.morphism = morphism;
  c.suite = suite;
  return c;
}

std::string broken_monad_file(const fixture::TempDir& dir) {
  const auto z3 = catalog::cyclic_group(3);
  auto t = identity_monad(z3);
  t.mu.components[0] = *z3->find_morphism("g");
  InstanceWriter w;
  w.category("Z3", *z3);
  w.monad_data("T", "Z3", t);
  return dir.write("broken.json", w.text());
}

}  // namespace

TEST_CASE("option parsing") {
  CHECK(parse_backend("finset") == Backend::finset);
  CHECK_FALSE(parse_backend("sets"));
  CHECK(parse_suite("pb3w") == Suite::pb3w);
  CHECK_FALSE(parse_suite("everything"));
  CHECK(parse_mode("strict") == PbwMode::strict);
  CHECK(to_string(PbwMode::up_to_iso) == "up_to_iso");
}

TEST_CASE("the whole corpus passes every suite") {
  fixture::TempDir dir;
  const auto input = dir.write_corpus();
  for (Suite s : {Suite::laws, Suite::envelope, Suite::pbw, Suite::freeness, Suite::pb3w, Suite::all}) {
    CAPTURE(to_string(s));
    const auto r = run(fincat(input, s));
    CHECK(r.exit_code == kExitPass);
    const auto report = json::parse(r.report);
    CHECK(report["instances"].size() == 28);
    CHECK(report["summary"]["failed"] == 0);
    CHECK(report["summary"]["errors"] == 0);
    CHECK(report["summary"]["checks"].get<int>() > 0);
  }
}

TEST_CASE("a law failure exits 1 and names the law") {
  fixture::TempDir dir;
  const auto r = run(fincat(broken_monad_file(dir), Suite::laws));
  CHECK(r.exit_code == kExitCheckFailed);
  CHECK(r.report.find("left-unit") != std::string::npos);
  const auto envelope = run(fincat(dir.path().string(), Suite::envelope));
  CHECK(envelope.exit_code == kExitStructural);
}

TEST_CASE("structural problems exit 2") {
  fixture::TempDir dir;
  CHECK(run(fincat(dir.write("bad.json", "{"), Suite::laws)).exit_code == kExitStructural);
  CHECK(run(fincat((dir.path() / "missing.json").string(), Suite::all)).exit_code == kExitStructural);
  CHECK(run(finset("powerset", "powerset", "id", Suite::freeness)).exit_code == kExitStructural);
  CHECK(run(finset("powerset", "powerset", "id", Suite::pb3w)).exit_code == kExitStructural);
  CHECK(run(finset("powerset", "maybe", "id", Suite::laws)).exit_code == kExitStructural);
  CHECK(run(finset("nope", "maybe", "id", Suite::laws)).exit_code == kExitStructural);
}

TEST_CASE("strict PBW implies PBW up to isomorphism on every corpus file") {
  fixture::TempDir dir;
  const auto input = dir.write_corpus();
  for (PbwMode mode : {PbwMode::strict, PbwMode::up_to_iso}) {
    auto config = fincat(input, Suite::pbw);
    config.mode = mode;
    const auto report = json::parse(run(config).report);
    for (const auto& inst : report["instances"]) {
      for (const auto& c : inst["checks"]) {
        if (c["check"] != "pbw-mode-implication") continue;
        CHECK(c["status"] == "pass");
        if (c["verdicts"]["strict"] == "pbw") CHECK(c["verdicts"]["up_to_iso"] == "pbw");
      }
    }
  }
}

TEST_CASE("reports are deterministic") {
  fixture::TempDir dir;
  const auto input = dir.write_corpus();
  auto config = fincat(input, Suite::all);
  config.dump_witnesses = true;
  const auto a = run(config);
  const auto b = run(config);
  CHECK(a.report == b.report);
  const auto f = finset("gset:Z2", "powerset", "forget", Suite::all);
  CHECK(run(f).report == run(f).report);
}

TEST_CASE("finset suites") {
  const auto laws = run(finset("maybe", "powerset", "embed", Suite::laws));
  CHECK(laws.exit_code == kExitPass);
  const auto probe = run(finset("gset:Z2", "powerset", "forget", Suite::pbw));
  CHECK(probe.exit_code == kExitPass);
  const auto report = json::parse(probe.report);
  const auto& check = report["instances"][0]["checks"][0];
  CHECK(check["verdict"] == "refuted");
  CHECK(check["witness"]["carrier"] == 2);
  const auto same = json::parse(run(finset("powerset", "powerset", "id", Suite::pbw)).report);
  CHECK(same["instances"][0]["checks"][0]["verdict"] == "not_refuted_at_bound");
  auto big = finset("vecF2", "vecF2", "id", Suite::envelope);
  big.max_size = 3;
  CHECK(run(big).exit_code == kExitCheckFailed);
}
