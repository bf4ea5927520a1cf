/* Copyright 2026 The hrg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Exercises the C interface from C. Argument: the fixture directory. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "hrg/hrg.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: FAILED %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static int contains(const char* s, const char* needle) { return s && strstr(s, needle) != NULL; }

int main(int argc, char** argv) {
  char path[4096];
  hrg_graph* g = NULL;
  hrg_graph* w = NULL;
  char* text = NULL;
  char* extra = NULL;
  int pass = -1, verdict = -1, partial = -1;

  if (argc < 2) {
    fprintf(stderr, "usage: capi_test FIXTURE_DIR\n");
    return 2;
  }

  EXPECT(hrg_version()[0] != '\0');
  EXPECT(strcmp(hrg_status_name(HRG_NOT_YANG_BAXTER), "NotYangBaxter") == 0);
  EXPECT(strcmp(hrg_status_name(HRG_INTERNAL), "Internal") == 0);
  EXPECT(strcmp(hrg_status_name(57), "Unknown") == 0);

  snprintf(path, sizeof path, "%s/pqr-7.1.json", argv[1]);
  EXPECT(hrg_graph_load(path, &g) == HRG_OK);
  EXPECT(hrg_graph_is_lazy(g) == 0);
  EXPECT(hrg_graph_validate(g, 0, &pass, &text) == HRG_OK);
  EXPECT(pass == 1);
  hrg_string_free(text);
  EXPECT(hrg_graph_analyze(g, "{\"depth\": 10}", &verdict, &text) == HRG_OK);
  EXPECT(verdict == HRG_NOT_EMBEDS);
  EXPECT(contains(text, "\"replay\": \"ok\""));
  hrg_string_free(text);
  EXPECT(hrg_graph_analyze(g, "{\"depth\": \"deep\"}", &verdict, &text) == HRG_MALFORMED_INPUT);
  EXPECT(hrg_last_error()[0] != '\0');
  EXPECT(hrg_graph_to_dot(g, &text) == HRG_OK);
  EXPECT(contains(text, "digraph"));
  hrg_string_free(text);

  EXPECT(hrg_graph_to_json(g, &text) == HRG_OK);
  EXPECT(hrg_graph_from_json(text, &w) == HRG_OK);
  hrg_string_free(text);
  hrg_graph_free(w);
  w = NULL;
  hrg_graph_free(g);
  g = NULL;

  snprintf(path, sizeof path, "%s/missing.json", argv[1]);
  EXPECT(hrg_graph_load(path, &g) == HRG_IO);
  EXPECT(g == NULL);
  EXPECT(hrg_graph_from_json("{", &g) == HRG_MALFORMED_INPUT);
  EXPECT(hrg_graph_catalog("no-such-graph", &g) == HRG_UNKNOWN_NAME);

  EXPECT(hrg_graph_catalog("omega-2", &g) == HRG_OK);
  EXPECT(hrg_graph_is_lazy(g) == 1);
  EXPECT(hrg_graph_to_json(g, &text) == HRG_WINDOW_TOO_SMALL);
  EXPECT(hrg_graph_window(g, "(0,0)", 2, &w) == HRG_OK);
  EXPECT(hrg_graph_validate(w, 1, &pass, &text) == HRG_OK);
  EXPECT(pass == 1);
  hrg_string_free(text);
  hrg_graph_free(w);
  w = NULL;
  hrg_graph_free(g);
  g = NULL;

  EXPECT(hrg_build("{\"steps\": [{\"op\": \"catalog\", \"name\": \"B2\"},"
                   " {\"op\": \"skew_product\", \"cocycle\": \"free\", \"radius\": 2}]}",
                   NULL, &g, &partial) == HRG_OK);
  EXPECT(partial == 1);
  hrg_graph_free(g);
  g = NULL;
  EXPECT(hrg_build("[{\"op\": \"catalog\", \"name\": \"B2\"}, {\"op\": \"restrict_colors\", \"colors\": [3]}]",
                   NULL, &g, &partial) == HRG_COLOR_OUT_OF_RANGE);
  EXPECT(contains(hrg_last_error(), "step 1"));

  EXPECT(hrg_catalog_list(&text) == HRG_OK);
  EXPECT(contains(text, "\"pqr-7.1\""));
  hrg_string_free(text);

  EXPECT(hrg_a2_normalize(NULL, "a0 a4^-1 a6", &text) == HRG_OK);
  EXPECT(contains(text, "a3^-1 a0^-1 (0,2)"));
  hrg_string_free(text);
  EXPECT(hrg_a2_normalize(NULL, "a0 b1", &text) == HRG_MALFORMED_INPUT);
  EXPECT(hrg_a2_lambda_t(NULL, &g, &extra) == HRG_OK);
  EXPECT(contains(extra, "\"b\""));
  EXPECT(hrg_graph_validate(g, 0, &pass, &text) == HRG_OK);
  EXPECT(pass == 1);
  hrg_string_free(text);
  hrg_string_free(extra);
  hrg_graph_free(g);
  g = NULL;
  {
    char* m1 = NULL;
    char* m2 = NULL;
    int rows = 0;
    const char* c;
    EXPECT(hrg_a2_matrices(NULL, &m1, &m2) == HRG_OK);
    for (c = m1; c && *c; ++c) rows += *c == '\n';
    EXPECT(rows == 42);
    hrg_string_free(m1);
    hrg_string_free(m2);
  }

  snprintf(path, sizeof path, "%s/tree-fixture.json", argv[1]);
  EXPECT(hrg_graph_load(path, &g) == HRG_OK);
  EXPECT(hrg_orbit_separate(g, "p1", "p2", 20, 0, &text) == HRG_OK);
  EXPECT(contains(text, "SeparatedAt"));
  hrg_string_free(text);
  EXPECT(hrg_orbit_separate(g, "p1", "p1", 20, 0, &text) == HRG_SHIFT_EQUIVALENT_DETECTED);
  hrg_graph_free(g);

  hrg_string_free(NULL);
  hrg_graph_free(NULL);

  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: ok\n");
  return 0;
}
