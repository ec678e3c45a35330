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

// pbwcheck: runs check suites and writes a JSON report to standard output
// or --out. The human summary goes to standard error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pbw/pbw.h"

int main(int argc, char** argv) {
  CLI::App app{"Check suites for Psi-morphisms of monads and their enveloping functors"};
  app.set_version_flag("--version", std::string(pbw_version()));

  std::string input, backend = "fincat", suite = "all", mode = "up_to_iso", out, t, s, morphism;
  std::uint64_t max_size = 2;
  bool dump = false;
  app.add_option("input", input, "Instance file or directory of instance files (fincat)");
  app.add_option("--backend", backend, "Backend")->check(CLI::IsMember({"fincat", "finset"}));
  app.add_option("--suite", suite, "Check suite")
      ->check(CLI::IsMember({"laws", "envelope", "pbw", "freeness", "pb3w", "all"}));
  app.add_option("--mode", mode, "PBW semantics")->check(CLI::IsMember({"strict", "up_to_iso"}));
  app.add_option("--max-size", max_size, "Largest carrier examined by the finset backend");
  app.add_flag("--dump-witnesses", dump, "Include witnesses in the report");
  app.add_option("--out", out, "Write the report here instead of standard output");
  app.add_option("--t", t, "finset: source monad (maybe, powerset, vecF2, gset:<Z1|Z2|Z3|S3>)");
  app.add_option("--s", s, "finset: target monad");
  app.add_option("--morphism", morphism, "finset: monad morphism (id, embed, forget)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  pbw_config config;
  pbw_config_init(&config);
  config.backend = backend.c_str();
  config.suite = suite.c_str();
  config.mode = mode.c_str();
  config.max_size = max_size;
  config.dump_witnesses = dump ? 1 : 0;
  config.input = input.empty() ? nullptr : input.c_str();
  config.t = t.empty() ? nullptr : t.c_str();
  config.s = s.empty() ? nullptr : s.c_str();
  config.morphism = morphism.empty() ? nullptr : morphism.c_str();

  pbw_report* report = nullptr;
  if (pbw_run(&config, &report) != PBW_OK) {
    std::cerr << "pbwcheck: " << pbw_last_error() << "\n";
    return 2;
  }
  int code = pbw_report_exit_code(report);
  if (out.empty()) {
    std::cout << pbw_report_json(report) << std::flush;
  } else {
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!(f << pbw_report_json(report))) {
      std::cerr << "pbwcheck: cannot write '" << out << "'\n";
      code = 2;
    }
  }
  std::cerr << pbw_report_summary(report);
  pbw_report_free(report);
  return code;
}
