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

#include <cstring>
#include <string>

#include "bluefish/bluefish.h"
#include "doctest.h"

namespace {

const char kStack[] =
    R"({"bluefish":1,"root":{"kind":"stackV","props":{"spacing":5},"children":[)"
    R"({"kind":"rect","name":"a","props":{"width":10,"height":10}},)"
    R"({"kind":"rect","name":"b","props":{"width":20,"height":10}}]}})";

struct EngineHandle {
  bf_engine* engine = nullptr;
  EngineHandle() { REQUIRE(bf_engine_create(&engine) == BF_OK); }
  ~EngineHandle() { bf_engine_destroy(engine); }
};

struct ResultHandle {
  bf_result* result = nullptr;
  ~ResultHandle() { bf_result_destroy(result); }
};

bf_status compile(const EngineHandle& e, const std::string& text, uint32_t flags, ResultHandle& out) {
  return bf_compile(e.engine, text.data(), text.size(), flags, &out.result);
}

}  // namespace

TEST_CASE("the library reports a version and status messages") {
  CHECK(std::string(bf_version()) == "0.1.0");
  CHECK(std::strlen(bf_status_message(BF_ERROR_DIAGNOSTICS)) > 0);
  CHECK(std::strlen(bf_status_message(static_cast<bf_status>(99))) > 0);
}

TEST_CASE("a valid document compiles to SVG and a dump") {
  EngineHandle e;
  ResultHandle r;
  REQUIRE(compile(e, kStack, BF_EMIT_SVG | BF_EMIT_DUMP, r) == BF_OK);
  CHECK(bf_result_ok(r.result));
  CHECK(bf_result_node_count(r.result) == 3);
  CHECK(bf_result_diagnostic_count(r.result) == 0);
  size_t length = 0;
  const char* svg = bf_result_svg(r.result, &length);
  REQUIRE(svg);
  CHECK(length == std::strlen(svg));
  CHECK(std::string(svg, length).rfind("<svg height=\"25\"", 0) == 0);
  const char* dump = bf_result_dump(r.result, &length);
  REQUIRE(dump);
  CHECK(std::string(dump).find("\"bluefishScene\": 1") != std::string::npos);
}

TEST_CASE("outputs that were not requested are absent") {
  EngineHandle e;
  ResultHandle r;
  REQUIRE(compile(e, kStack, 0, r) == BF_OK);
  size_t length = 7;
  CHECK(bf_result_svg(r.result, &length) == nullptr);
  CHECK(length == 0);
  CHECK(bf_result_dump(r.result, nullptr) == nullptr);
}

TEST_CASE("diagnostics are exposed through the result") {
  EngineHandle e;
  ResultHandle r;
  const std::string text =
      R"({"bluefish":1,"root":{"kind":"group","children":[{"kind":"stackV","children":[{"kind":"ref","select":"nope"}]}]}})";
  REQUIRE(compile(e, text, BF_EMIT_SVG, r) == BF_ERROR_DIAGNOSTICS);
  REQUIRE(r.result);
  CHECK_FALSE(bf_result_ok(r.result));
  REQUIRE(bf_result_diagnostic_count(r.result) == 1);
  CHECK(std::string(bf_result_diagnostic_code(r.result, 0)) == "BF002");
  CHECK(bf_result_diagnostic_severity(r.result, 0) == BF_SEVERITY_ERROR);
  CHECK(std::string(bf_result_diagnostic_message(r.result, 0)).find("nope") != std::string::npos);
  REQUIRE(bf_result_diagnostic_path_count(r.result, 0) >= 1);
  CHECK(std::string(bf_result_diagnostic_path(r.result, 0, 0)) == "group/stackV[0]/ref[0]");
  CHECK(bf_result_diagnostic_code(r.result, 5) == nullptr);
  CHECK(bf_result_diagnostic_path(r.result, 0, 99) == nullptr);
  CHECK(bf_result_svg(r.result, nullptr) == nullptr);
}

TEST_CASE("invalid arguments are rejected without crashing") {
  bf_result* out = nullptr;
  CHECK(bf_compile(nullptr, "{}", 2, 0, &out) == BF_ERROR_INVALID_ARGUMENT);
  CHECK(std::strlen(bf_last_error()) > 0);
  EngineHandle e;
  CHECK(bf_compile(e.engine, nullptr, 5, 0, &out) == BF_ERROR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  // A NULL document of length zero is the empty document.
  ResultHandle empty;
  CHECK(bf_compile(e.engine, nullptr, 0, 0, &empty.result) == BF_ERROR_DIAGNOSTICS);
  CHECK(std::string(bf_result_diagnostic_code(empty.result, 0)) == "BF006");
  CHECK(bf_compile(e.engine, "{}", 2, 0, nullptr) == BF_ERROR_INVALID_ARGUMENT);
  CHECK(bf_engine_create(nullptr) == BF_ERROR_INVALID_ARGUMENT);
  CHECK(bf_result_ok(nullptr) == 0);
  CHECK(bf_result_node_count(nullptr) == 0);
  CHECK(bf_result_diagnostic_count(nullptr) == 0);
  bf_result_destroy(nullptr);
  bf_engine_destroy(nullptr);
  bf_string_free(nullptr);
}

TEST_CASE("template composites register through the C interface") {
  EngineHandle e;
  const char* tmpl =
      R"({"kind":"background","props":{"padding":"$pad"},"children":[{"kind":"$children"}]})";
  REQUIRE(bf_engine_register_composite(e.engine, "boxed", tmpl, 0) == BF_OK);
  CHECK(bf_engine_register_composite(e.engine, "boxed", tmpl, 0) == BF_ERROR_DUPLICATE_KIND);
  CHECK(bf_engine_register_composite(e.engine, "boxed", tmpl, 1) == BF_OK);
  CHECK(bf_engine_register_composite(e.engine, "rect", tmpl, 0) == BF_ERROR_DUPLICATE_KIND);
  CHECK(bf_engine_register_composite(e.engine, "bad", "{", 0) == BF_ERROR_INVALID_ARGUMENT);
  CHECK(bf_engine_register_composite(e.engine, "ref", tmpl, 0) == BF_ERROR_INVALID_ARGUMENT);

  ResultHandle r;
  const std::string text =
      R"({"bluefish":1,"root":{"kind":"boxed","props":{"pad":3},"children":[{"kind":"rect","props":{"width":4,"height":4}}]}})";
  REQUIRE(compile(e, text, BF_EMIT_SVG, r) == BF_OK);
  CHECK(std::string(bf_result_svg(r.result, nullptr)).find("viewBox=\"0 0 10 10\"") != std::string::npos);
}

TEST_CASE("generated documents come back as owned strings") {
  char* text = nullptr;
  size_t length = 0;
  REQUIRE(bf_generate_document("nested-stacks", 50, &text, &length) == BF_OK);
  REQUIRE(text);
  CHECK(length == std::strlen(text));
  EngineHandle e;
  ResultHandle r;
  REQUIRE(compile(e, std::string(text, length), 0, r) == BF_OK);
  CHECK(bf_result_node_count(r.result) == 50);
  bf_string_free(text);
  CHECK(bf_generate_document("unknown", 5, &text, &length) == BF_ERROR_INVALID_ARGUMENT);
}
