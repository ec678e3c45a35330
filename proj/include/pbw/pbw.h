/*
 *  Copyright 2026 The pbwcheck Authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

/* C interface to the checker. Handles are opaque; every function that can
 * fail returns a pbw_status and leaves a message for pbw_last_error() in
 * the calling thread. Strings returned through out-parameters are owned by
 * the caller and released with pbw_string_free. */

#ifndef PBW_PBW_H_
#define PBW_PBW_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PBW_API __declspec(dllexport)
#else
#define PBW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pbw_status {
  PBW_OK = 0,
  PBW_E_PARSE = 1,      /* malformed instance text */
  PBW_E_STRUCTURAL = 2, /* schema violation or dangling reference */
  PBW_E_DOMAIN = 3,     /* argument outside an operation's domain */
  PBW_E_ASSUMPTION = 4, /* missing reflexive coequalizers */
  PBW_E_BOUND = 5,      /* a configured size bound was exceeded */
  PBW_E_RELATION = 6,   /* a required identity failed */
  PBW_E_IO = 7,
  PBW_E_USAGE = 8,      /* bad argument to this interface */
  PBW_E_INTERNAL = 9
} pbw_status;

typedef struct pbw_instance pbw_instance;
typedef struct pbw_report pbw_report;

typedef struct pbw_config {
  const char* backend;  /* "fincat" | "finset" */
  const char* suite;    /* "laws" | "envelope" | "pbw" | "freeness" | "pb3w" | "all" */
  const char* mode;     /* "strict" | "up_to_iso" */
  uint64_t max_size;
  int dump_witnesses;
  const char* input;    /* fincat: file or directory */
  const char* t;        /* finset catalogue ids */
  const char* s;
  const char* morphism; /* finset registry name; NULL means "id" */
} pbw_config;

PBW_API const char* pbw_version(void);
PBW_API const char* pbw_status_name(pbw_status status);
/* Message of the last failure in this thread; empty after a success. */
PBW_API const char* pbw_last_error(void);
PBW_API void pbw_string_free(char* s);

PBW_API pbw_status pbw_instance_load(const char* path, pbw_instance** out);
PBW_API pbw_status pbw_instance_parse(const char* text, size_t length, pbw_instance** out);
PBW_API pbw_status pbw_instance_save(const pbw_instance* inst, const char* path);
PBW_API pbw_status pbw_instance_text(const pbw_instance* inst, char** out);
/* Number of Psi-morphisms in the instance. */
PBW_API size_t pbw_instance_psi_count(const pbw_instance* inst);
/* Runs every validator; *ok is 1 when all pass, and *summary (optional)
 * receives the issues. */
PBW_API pbw_status pbw_instance_validate(const pbw_instance* inst, int* ok, char** summary);
PBW_API void pbw_instance_free(pbw_instance* inst);

/* Defaults: fincat, all, up_to_iso, max_size 2, no witnesses. */
PBW_API void pbw_config_init(pbw_config* config);
/* Fails only for unknown backend, suite or mode names; usage and
 * structural problems of the run itself are part of the report. */
PBW_API pbw_status pbw_run(const pbw_config* config, pbw_report** out);
PBW_API const char* pbw_report_json(const pbw_report* report);
PBW_API const char* pbw_report_summary(const pbw_report* report);
/* 0 every check passed, 1 a check failed, 2 structural or usage error. */
PBW_API int pbw_report_exit_code(const pbw_report* report);
PBW_API void pbw_report_free(pbw_report* report);

/* Writes the bundled corpus into an existing directory. */
PBW_API pbw_status pbw_write_corpus(const char* directory, size_t* files_written);

#ifdef __cplusplus
}
#endif

#endif /* PBW_PBW_H_ */
