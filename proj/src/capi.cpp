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

#include "pbw/pbw.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <string>

#include "pbw/corpus.hpp"
#include "pbw/instance.hpp"
#include "pbw/run.hpp"

struct pbw_instance {
  pbw::Instance inst;
};

struct pbw_report {
  pbw::RunResult result;
};

namespace {

thread_local std::string last_error;

pbw_status fail(pbw_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

pbw_status ok() {
  last_error.clear();
  return PBW_OK;
}

// Maps the exception in flight to a status.
pbw_status translate() {
  try {
    throw;
  } catch (const pbw::ParseError& e) {
    return fail(PBW_E_PARSE, e.what());
  } catch (const pbw::StructuralError& e) {
    return fail(PBW_E_STRUCTURAL, e.what());
  } catch (const pbw::DomainError& e) {
    return fail(PBW_E_DOMAIN, e.what());
  } catch (const pbw::AssumptionError& e) {
    return fail(PBW_E_ASSUMPTION, e.what());
  } catch (const pbw::BoundError& e) {
    return fail(PBW_E_BOUND, e.what());
  } catch (const pbw::RelationError& e) {
    return fail(PBW_E_RELATION, e.what());
  } catch (const pbw::IoError& e) {
    return fail(PBW_E_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PBW_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PBW_E_INTERNAL, e.what());
  } catch (...) {
    return fail(PBW_E_INTERNAL, "unknown exception");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* pbw_version(void) { return "1.0.0"; }

const char* pbw_status_name(pbw_status status) {
  switch (status) {
    case PBW_OK: return "ok";
    case PBW_E_PARSE: return "parse";
    case PBW_E_STRUCTURAL: return "structural";
    case PBW_E_DOMAIN: return "domain";
    case PBW_E_ASSUMPTION: return "assumption";
    case PBW_E_BOUND: return "bound";
    case PBW_E_RELATION: return "relation";
    case PBW_E_IO: return "io";
    case PBW_E_USAGE: return "usage";
    case PBW_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* pbw_last_error(void) { return last_error.c_str(); }

void pbw_string_free(char* s) { std::free(s); }

pbw_status pbw_instance_load(const char* path, pbw_instance** out) {
  if (!path || !out) return fail(PBW_E_USAGE, "null argument");
  *out = nullptr;
  try {
    *out = new pbw_instance{pbw::Instance::load(path)};
    return ok();
  } catch (...) {
    return translate();
  }
}

pbw_status pbw_instance_parse(const char* text, size_t length, pbw_instance** out) {
  if (!text || !out) return fail(PBW_E_USAGE, "null argument");
  *out = nullptr;
  try {
    *out = new pbw_instance{pbw::Instance::parse(std::string_view(text, length))};
    return ok();
  } catch (...) {
    return translate();
  }
}

pbw_status pbw_instance_save(const pbw_instance* inst, const char* path) {
  if (!inst || !path) return fail(PBW_E_USAGE, "null argument");
  try {
    inst->inst.save(path);
    return ok();
  } catch (...) {
    return translate();
  }
}

pbw_status pbw_instance_text(const pbw_instance* inst, char** out) {
  if (!inst || !out) return fail(PBW_E_USAGE, "null argument");
  try {
    *out = duplicate(inst->inst.canonical());
    return ok();
  } catch (...) {
    return translate();
  }
}

size_t pbw_instance_psi_count(const pbw_instance* inst) {
  return inst ? inst->inst.psi_morphisms().size() : 0;
}

pbw_status pbw_instance_validate(const pbw_instance* inst, int* valid, char** summary) {
  if (!inst || !valid) return fail(PBW_E_USAGE, "null argument");
  try {
    std::string text;
    bool all = true;
    for (const auto& item : inst->inst.validate()) {
      if (item.report.ok()) continue;
      all = false;
      text += item.kind + " '" + item.name + "': " + item.report.summary() + "\n";
    }
    *valid = all ? 1 : 0;
    if (summary) *summary = duplicate(text);
    return ok();
  } catch (...) {
    return translate();
  }
}

void pbw_instance_free(pbw_instance* inst) { delete inst; }

void pbw_config_init(pbw_config* config) {
  if (!config) return;
  config->backend = "fincat";
  config->suite = "all";
  config->mode = "up_to_iso";
  config->max_size = 2;
  config->dump_witnesses = 0;
  config->input = nullptr;
  config->t = nullptr;
  config->s = nullptr;
  config->morphism = nullptr;
}

pbw_status pbw_run(const pbw_config* config, pbw_report** out) {
  if (!config || !out) return fail(PBW_E_USAGE, "null argument");
  *out = nullptr;
  pbw::RunConfig rc;
  const auto backend = pbw::parse_backend(config->backend ? config->backend : "");
  if (!backend) return fail(PBW_E_USAGE, "unknown backend");
  const auto suite = pbw::parse_suite(config->suite ? config->suite : "");
  if (!suite) return fail(PBW_E_USAGE, "unknown suite");
  const auto mode = pbw::parse_mode(config->mode ? config->mode : "");
  if (!mode) return fail(PBW_E_USAGE, "unknown mode");
  rc.backend = *backend;
  rc.suite = *suite;
  rc.mode = *mode;
  rc.max_size = config->max_size;
  rc.dump_witnesses = config->dump_witnesses != 0;
  if (config->input) rc.input = config->input;
  if (config->t) rc.t = config->t;
  if (config->s) rc.s = config->s;
  if (config->morphism) rc.morphism = config->morphism;
  try {
    *out = new pbw_report{pbw::run(rc)};
    return ok();
  } catch (...) {
    return translate();
  }
}

const char* pbw_report_json(const pbw_report* report) { return report ? report->result.report.c_str() : ""; }

const char* pbw_report_summary(const pbw_report* report) {
  return report ? report->result.summary.c_str() : "";
}

int pbw_report_exit_code(const pbw_report* report) { return report ? report->result.exit_code : 2; }

void pbw_report_free(pbw_report* report) { delete report; }

pbw_status pbw_write_corpus(const char* directory, size_t* files_written) {
  if (!directory) return fail(PBW_E_USAGE, "null argument");
  try {
    if (!std::filesystem::is_directory(directory))
      return fail(PBW_E_IO, std::string("not a directory: '") + directory + "'");
    size_t n = 0;
    for (const auto& f : pbw::builtin_corpus()) {
      const auto path = std::filesystem::path(directory) / f.name;
      std::ofstream o(path, std::ios::binary | std::ios::trunc);
      if (!(o << f.text)) return fail(PBW_E_IO, "cannot write '" + path.string() + "'");
      ++n;
    }
    if (files_written) *files_written = n;
    return ok();
  } catch (...) {
    return translate();
  }
}

}  // extern "C"
