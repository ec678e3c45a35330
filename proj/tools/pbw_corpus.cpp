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

// pbw-corpus DIR: writes the bundled instance corpus into DIR.

#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pbw/pbw.h"

int main(int argc, char** argv) {
  CLI::App app{"Write the bundled instance corpus"};
  std::string dir;
  app.add_option("directory", dir, "Output directory (created if missing)")->required();
  CLI11_PARSE(app, argc, argv);

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "pbw-corpus: " << ec.message() << "\n";
    return 2;
  }
  size_t n = 0;
  if (pbw_write_corpus(dir.c_str(), &n) != PBW_OK) {
    std::cerr << "pbw-corpus: " << pbw_last_error() << "\n";
    return 2;
  }
  std::cerr << "wrote " << n << " files to " << dir << "\n";
  return 0;
}
