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

/* C interface to the Bluefish diagram layout engine. */

#ifndef BLUEFISH_BLUEFISH_H_
#define BLUEFISH_BLUEFISH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BLUEFISH_BUILDING_LIBRARY)
#define BLUEFISH_API __declspec(dllexport)
#else
#define BLUEFISH_API __declspec(dllimport)
#endif
#else
#define BLUEFISH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bf_engine bf_engine;
typedef struct bf_result bf_result;

typedef enum bf_status {
  BF_OK = 0,
  BF_ERROR_DIAGNOSTICS = 1,
  BF_ERROR_INVALID_ARGUMENT = 2,
  BF_ERROR_DUPLICATE_KIND = 3,
  BF_ERROR_OUT_OF_MEMORY = 4,
  BF_ERROR_INTERNAL = 5
} bf_status;

typedef enum bf_severity {
  BF_SEVERITY_ERROR = 0,
  BF_SEVERITY_WARNING = 1
} bf_severity;

/* Flags for bf_compile. */
#define BF_EMIT_SVG 1u
#define BF_EMIT_DUMP 2u

BLUEFISH_API const char* bf_version(void);
BLUEFISH_API const char* bf_status_message(bf_status status);

/* Message for the last failed call on this thread, or "". */
BLUEFISH_API const char* bf_last_error(void);

BLUEFISH_API bf_status bf_engine_create(bf_engine** out);
BLUEFISH_API void bf_engine_destroy(bf_engine* engine);

/* Registers a composite element kind defined by a JSON element template.
 * Strings "$name" in the template are replaced by the element's prop
 * `name`; an element {"kind": "$children"} inside a children array splices
 * in the element's children. Returns BF_ERROR_DUPLICATE_KIND when the kind
 * exists and `override_existing` is 0. */
BLUEFISH_API bf_status bf_engine_register_composite(
    bf_engine* engine, const char* kind, const char* template_json,
    int override_existing);

/* Compiles a document. A result is produced whenever the return value is
 * BF_OK or BF_ERROR_DIAGNOSTICS; the caller owns it. */
BLUEFISH_API bf_status bf_compile(const bf_engine* engine,
                                  const char* document, size_t length,
                                  uint32_t flags, bf_result** out);

BLUEFISH_API void bf_result_destroy(bf_result* result);
/* 1 when no error diagnostics were produced. */
BLUEFISH_API int bf_result_ok(const bf_result* result);
/* NUL-terminated outputs owned by the result; NULL when not produced. */
BLUEFISH_API const char* bf_result_svg(const bf_result* result,
                                       size_t* length);
BLUEFISH_API const char* bf_result_dump(const bf_result* result,
                                        size_t* length);
BLUEFISH_API size_t bf_result_node_count(const bf_result* result);

BLUEFISH_API size_t bf_result_diagnostic_count(const bf_result* result);
/* "BF001" etc.; NULL for an out-of-range index. */
BLUEFISH_API const char* bf_result_diagnostic_code(const bf_result* result,
                                                   size_t index);
BLUEFISH_API bf_severity bf_result_diagnostic_severity(
    const bf_result* result, size_t index);
BLUEFISH_API const char* bf_result_diagnostic_message(
    const bf_result* result, size_t index);
BLUEFISH_API size_t bf_result_diagnostic_path_count(const bf_result* result,
                                                    size_t index);
BLUEFISH_API const char* bf_result_diagnostic_path(const bf_result* result,
                                                   size_t index,
                                                   size_t path_index);

/* Synthesizes a document with about `nodes` scenegraph nodes. Generators:
 * "nested-stacks", "insertion-sort-like". Free the text with
 * bf_string_free. */
BLUEFISH_API bf_status bf_generate_document(const char* generator,
                                            size_t nodes, char** out,
                                            size_t* length);
BLUEFISH_API void bf_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* BLUEFISH_BLUEFISH_H_ */
