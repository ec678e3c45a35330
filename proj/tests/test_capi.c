/*  Copyright 2026 The pbwcheck Authors
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

/* Exercises the shared library from plain C. Argument: a scratch directory. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "pbw/pbw.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

int main(int argc, char** argv) {
  if (argc != 2) {
    fprintf(stderr, "usage: test_capi SCRATCH_DIR\n");
    return 2;
  }
  const char* dir = argv[1];
  char path[4096];

  EXPECT(strlen(pbw_version()) > 0);
  EXPECT(strcmp(pbw_status_name(PBW_E_BOUND), "") != 0);

  size_t written = 0;
  EXPECT(pbw_write_corpus(dir, &written) == PBW_OK);
  EXPECT(written == 28);

  snprintf(path, sizeof path, "%s/identity.json", dir);
  pbw_instance* inst = NULL;
  EXPECT(pbw_instance_load(path, &inst) == PBW_OK);
  EXPECT(inst != NULL);
  if (inst) {
    EXPECT(pbw_instance_psi_count(inst) == 1);
    int ok = 0;
    char* summary = NULL;
    EXPECT(pbw_instance_validate(inst, &ok, &summary) == PBW_OK);
    EXPECT(ok == 1);
    pbw_string_free(summary);

    char* text = NULL;
    EXPECT(pbw_instance_text(inst, &text) == PBW_OK);
    pbw_instance* again = NULL;
    EXPECT(pbw_instance_parse(text, strlen(text), &again) == PBW_OK);
    char* text2 = NULL;
    EXPECT(pbw_instance_text(again, &text2) == PBW_OK);
    EXPECT(text2 && strcmp(text, text2) == 0);
    pbw_string_free(text);
    pbw_string_free(text2);
    pbw_instance_free(again);
    pbw_instance_free(inst);
  }

  pbw_instance* bad = NULL;
  EXPECT(pbw_instance_parse("{\n ,", 4, &bad) == PBW_E_PARSE);
  EXPECT(bad == NULL);
  EXPECT(strstr(pbw_last_error(), "line 2") != NULL);
  EXPECT(pbw_instance_parse("{}", 2, &bad) == PBW_E_STRUCTURAL);
  EXPECT(pbw_instance_load("/nonexistent/x.json", &bad) == PBW_E_IO);
  EXPECT(pbw_instance_parse(NULL, 0, &bad) == PBW_E_USAGE);

  pbw_config config;
  pbw_config_init(&config);
  config.input = dir;
  config.suite = "pb3w";
  pbw_report* report = NULL;
  EXPECT(pbw_run(&config, &report) == PBW_OK);
  if (report) {
    EXPECT(pbw_report_exit_code(report) == 0);
    EXPECT(strstr(pbw_report_json(report), "\"tool\": \"pbwcheck\"") != NULL);
    EXPECT(strlen(pbw_report_summary(report)) > 0);
    pbw_report_free(report);
  }

  pbw_config_init(&config);
  config.backend = "finset";
  config.t = "gset:Z2";
  config.s = "powerset";
  config.morphism = "forget";
  config.suite = "pbw";
  report = NULL;
  EXPECT(pbw_run(&config, &report) == PBW_OK);
  if (report) {
    EXPECT(strstr(pbw_report_json(report), "\"refuted\"") != NULL);
    pbw_report_free(report);
  }

  config.suite = "freeness";
  report = NULL;
  EXPECT(pbw_run(&config, &report) == PBW_OK);
  if (report) {
    EXPECT(pbw_report_exit_code(report) == 2);
    pbw_report_free(report);
  }

  config.suite = "bogus";
  report = NULL;
  EXPECT(pbw_run(&config, &report) == PBW_E_USAGE);
  EXPECT(report == NULL);

  if (failures) fprintf(stderr, "%d expectation(s) failed\n", failures);
  else printf("C API: all expectations hold\n");
  return failures ? 1 : 0;
}
