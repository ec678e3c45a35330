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

// Check suites over instance files (fincat) or catalogue monads (finset),
// assembled into a JSON report whose bytes depend only on the input and
// the configuration.

#ifndef PBW_RUN_HPP_
#define PBW_RUN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pbw/tmodule.hpp"

namespace pbw {

enum class Backend { fincat, finset };
enum class Suite { laws, envelope, pbw, freeness, pb3w, all };

std::optional<Backend> parse_backend(std::string_view s);
std::optional<Suite> parse_suite(std::string_view s);
std::optional<PbwMode> parse_mode(std::string_view s);
std::string_view to_string(Backend b);
std::string_view to_string(Suite s);
std::string_view to_string(PbwMode m);

struct RunConfig {
  Backend backend = Backend::fincat;
  Suite suite = Suite::all;
  PbwMode mode = PbwMode::up_to_iso;
  std::uint64_t max_size = 2;  // finset carrier bound
  bool dump_witnesses = false;
  std::string input;     // fincat: an instance file or a directory of them
  std::string t, s;      // finset: catalogue ids
  std::string morphism;  // finset: registry name, "id" when empty
};

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitStructural = 2 };

struct RunResult {
  std::string report;   // JSON, newline terminated
  std::string summary;  // human-readable, includes elapsed time
  int exit_code = kExitStructural;
};

/// Never throws on bad input: usage and structural problems end up in the
/// report with exit code 2.
RunResult run(const RunConfig& config);

}  // namespace pbw

#endif  // PBW_RUN_HPP_
