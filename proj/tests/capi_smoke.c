// Copyright 2026 The Bluefish Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* Compiles against the public header as plain C and renders one document. */

#include <stdio.h>
#include <string.h>

#include "bluefish/bluefish.h"

int main(void) {
  static const char kDoc[] =
      "{\"bluefish\":1,\"root\":{\"kind\":\"circle\",\"props\":{\"r\":5}}}";
  bf_engine* engine = NULL;
  bf_result* result = NULL;
  size_t length = 0;
  const char* svg;
  int failed = 0;

  if (bf_engine_create(&engine) != BF_OK) return 1;
  if (bf_compile(engine, kDoc, strlen(kDoc), BF_EMIT_SVG, &result) != BF_OK) {
    fprintf(stderr, "compile failed: %s\n", bf_last_error());
    bf_engine_destroy(engine);
    return 1;
  }
  svg = bf_result_svg(result, &length);
  if (svg == NULL || strstr(svg, "<circle") == NULL || length != strlen(svg)) {
    fprintf(stderr, "unexpected output\n");
    failed = 1;
  }
  bf_result_destroy(result);
  bf_engine_destroy(engine);
  return failed;
}
