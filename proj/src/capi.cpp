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

#include "bluefish/bluefish.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "engine.hpp"
#include "generators.hpp"

struct bf_engine {
  bluefish::Engine engine;
};

struct bf_result {
  bluefish::CompileResult result;
  std::vector<std::string> codes;
};

namespace {

thread_local std::string last_error;

bf_status fail(bf_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

const bluefish::Diagnostic* diagnostic(const bf_result* r, size_t index) {
  if (r == nullptr || index >= r->result.diagnostics.size()) return nullptr;
  return &r->result.diagnostics[index];
}

}  // namespace

extern "C" {

const char* bf_version(void) { return "0.1.0"; }

const char* bf_status_message(bf_status status) {
  switch (status) {
    case BF_OK: return "ok";
    case BF_ERROR_DIAGNOSTICS: return "the document has errors";
    case BF_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case BF_ERROR_DUPLICATE_KIND: return "element kind already registered";
    case BF_ERROR_OUT_OF_MEMORY: return "out of memory";
    case BF_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bf_last_error(void) { return last_error.c_str(); }

bf_status bf_engine_create(bf_engine** out) {
  if (out == nullptr) return fail(BF_ERROR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  try {
    *out = new bf_engine{};
    return BF_OK;
  } catch (const std::bad_alloc&) {
    return fail(BF_ERROR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(BF_ERROR_INTERNAL, e.what());
  }
}

void bf_engine_destroy(bf_engine* engine) { delete engine; }

bf_status bf_engine_register_composite(bf_engine* engine, const char* kind,
                                       const char* template_json,
                                       int override_existing) {
  if (engine == nullptr || kind == nullptr || template_json == nullptr) {
    return fail(BF_ERROR_INVALID_ARGUMENT, "NULL argument");
  }
  try {
    auto t = bluefish::Json::parse(template_json);
    if (!t.is_object() || !t.contains("kind")) {
      return fail(BF_ERROR_INVALID_ARGUMENT,
                  "template must be an element object");
    }
    bluefish::ElementKindSpec spec;
    spec.kind = kind;
    spec.open_props = true;
    spec.expand = bluefish::template_expansion(std::move(t));
    engine->engine.registry().register_kind(std::move(spec),
                                            override_existing != 0);
    return BF_OK;
  } catch (const bluefish::Error& e) {
    return fail(e.code() == bluefish::Code::kDuplicateKind
                    ? BF_ERROR_DUPLICATE_KIND
                    : BF_ERROR_INVALID_ARGUMENT,
                e.raw_message());
  } catch (const bluefish::Json::exception& e) {
    return fail(BF_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BF_ERROR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(BF_ERROR_INTERNAL, e.what());
  }
}

bf_status bf_compile(const bf_engine* engine, const char* document,
                     size_t length, uint32_t flags, bf_result** out) {
  if (out == nullptr) return fail(BF_ERROR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  if (engine == nullptr || (document == nullptr && length != 0)) {
    return fail(BF_ERROR_INVALID_ARGUMENT, "NULL argument");
  }
  try {
    auto* r = new bf_result{};
    bluefish::CompileOptions options;
    options.svg = (flags & BF_EMIT_SVG) != 0;
    options.dump = (flags & BF_EMIT_DUMP) != 0;
    r->result = engine->engine.compile(
        std::string_view(document == nullptr ? "" : document, length),
        options);
    for (const auto& d : r->result.diagnostics) {
      r->codes.emplace_back(bluefish::code_string(d.code));
    }
    *out = r;
    if (!r->result.ok()) {
      return fail(BF_ERROR_DIAGNOSTICS, r->result.diagnostics.front().message);
    }
    return BF_OK;
  } catch (const std::bad_alloc&) {
    return fail(BF_ERROR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(BF_ERROR_INTERNAL, e.what());
  }
}

void bf_result_destroy(bf_result* result) { delete result; }

int bf_result_ok(const bf_result* result) {
  return result != nullptr && result->result.ok() ? 1 : 0;
}

const char* bf_result_svg(const bf_result* result, size_t* length) {
  if (result == nullptr || !result->result.svg) {
    if (length != nullptr) *length = 0;
    return nullptr;
  }
  if (length != nullptr) *length = result->result.svg->size();
  return result->result.svg->c_str();
}

const char* bf_result_dump(const bf_result* result, size_t* length) {
  if (result == nullptr || !result->result.dump) {
    if (length != nullptr) *length = 0;
    return nullptr;
  }
  if (length != nullptr) *length = result->result.dump->size();
  return result->result.dump->c_str();
}

size_t bf_result_node_count(const bf_result* result) {
  return result == nullptr ? 0 : result->result.node_count();
}

size_t bf_result_diagnostic_count(const bf_result* result) {
  return result == nullptr ? 0 : result->result.diagnostics.size();
}

const char* bf_result_diagnostic_code(const bf_result* result, size_t index) {
  if (diagnostic(result, index) == nullptr) return nullptr;
  return result->codes[index].c_str();
}

bf_severity bf_result_diagnostic_severity(const bf_result* result,
                                          size_t index) {
  const auto* d = diagnostic(result, index);
  return d != nullptr && !d->is_error() ? BF_SEVERITY_WARNING
                                        : BF_SEVERITY_ERROR;
}

const char* bf_result_diagnostic_message(const bf_result* result,
                                         size_t index) {
  const auto* d = diagnostic(result, index);
  return d == nullptr ? nullptr : d->message.c_str();
}

size_t bf_result_diagnostic_path_count(const bf_result* result,
                                       size_t index) {
  const auto* d = diagnostic(result, index);
  return d == nullptr ? 0 : d->paths.size();
}

const char* bf_result_diagnostic_path(const bf_result* result, size_t index,
                                      size_t path_index) {
  const auto* d = diagnostic(result, index);
  if (d == nullptr || path_index >= d->paths.size()) return nullptr;
  return d->paths[path_index].c_str();
}

bf_status bf_generate_document(const char* generator, size_t nodes,
                               char** out, size_t* length) {
  if (out == nullptr || generator == nullptr) {
    return fail(BF_ERROR_INVALID_ARGUMENT, "NULL argument");
  }
  *out = nullptr;
  try {
    const auto doc = bluefish::generate_document(generator, nodes);
    if (!doc) {
      return fail(BF_ERROR_INVALID_ARGUMENT,
                  "unknown generator or zero size");
    }
    char* text = static_cast<char*>(std::malloc(doc->size() + 1));
    if (text == nullptr) return fail(BF_ERROR_OUT_OF_MEMORY, "out of memory");
    std::memcpy(text, doc->c_str(), doc->size() + 1);
    *out = text;
    if (length != nullptr) *length = doc->size();
    return BF_OK;
  } catch (const std::bad_alloc&) {
    return fail(BF_ERROR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(BF_ERROR_INTERNAL, e.what());
  }
}

void bf_string_free(char* text) { std::free(text); }

}  // extern "C"
