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

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;  // stdout and stderr together
};

Run run(const std::string& args) {
  const std::string command = std::string("BLUEFISH_NO_COLOR=1 \"") + BLUEFISH_CLI + "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string("\"") + BLUEFISH_FIXTURES + "/" + name + "\"";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("bluefish-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("check accepts a valid document") {
  const Run r = run("check " + fixture("planets.json"));
  CHECK(r.status == 0);
  CHECK(r.out == "ok\n");
}

TEST_CASE("check reports diagnostics with paths and exits 1") {
  const Run r = run("check " + fixture("unresolved.json"));
  CHECK(r.status == 1);
  CHECK(r.out.find("error[BF002]") != std::string::npos);
  CHECK(r.out.find("  at group/") != std::string::npos);
  CHECK(r.out.find("\x1b[") == std::string::npos);

  const Run conflict = run("check " + fixture("conflict.json"));
  CHECK(conflict.status == 1);
  CHECK(conflict.out.find("error[BF001]") != std::string::npos);
}

TEST_CASE("render writes the picture and optionally the scene dump") {
  TempDir tmp;
  const fs::path out = tmp.path / "stack_refs.svg";
  const Run r = run("render " + fixture("stack_refs.json") + " --out \"" + out.string() + "\" --dump");
  CHECK(r.status == 0);
  REQUIRE(fs::exists(out));
  CHECK(slurp(out).rfind("<svg height=\"60\" viewBox=\"0 0 30 60\"", 0) == 0);
  const fs::path dump = tmp.path / "stack_refs.scene.json";
  REQUIRE(fs::exists(dump));
  const auto scene = nlohmann::json::parse(slurp(dump));
  CHECK(scene.at("geometry").at("b").at("y") == 50);

  const fs::path plain = tmp.path / "plain.svg";
  CHECK(run("render " + fixture("stack_refs.json") + " --out \"" + plain.string() + "\"").status == 0);
  CHECK_FALSE(fs::exists(tmp.path / "plain.scene.json"));
  CHECK(slurp(plain) == slurp(out));
}

TEST_CASE("warnings do not fail a render") {
  TempDir tmp;
  const fs::path out = tmp.path / "c.svg";
  const Run r = run("render " + fixture("connectors.json") + " --out \"" + out.string() + "\"");
  CHECK(r.status == 0);
  CHECK(fs::exists(out));
}

TEST_CASE("usage and IO problems exit 2") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("check").status == 2);
  const Run missing = run("check /nonexistent/doc.json");
  CHECK(missing.status == 2);
  CHECK(missing.out.find("cannot read") != std::string::npos);
  CHECK(run("render " + fixture("stack_refs.json") + " --out /nonexistent/dir/x.svg").status == 2);
  CHECK(run("bench nested-stacks --sizes 0").status == 2);
  const Run unknown = run("bench nope --sizes 10");
  CHECK(unknown.status == 2);
  CHECK(unknown.out.find("median_ms") == std::string::npos);
}

TEST_CASE("bench prints one row per size") {
  const Run r = run("bench nested-stacks --sizes 10,20 --reps 1");
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(header.rfind("size", 0) == 0);
  CHECK(header.find("median_ms") != std::string::npos);
  std::istringstream a(row1);
  size_t size = 0, nodes = 0;
  double ms = -1;
  a >> size >> nodes >> ms;
  CHECK(size == 10);
  CHECK(nodes == 10);
  CHECK(ms >= 0);
  std::istringstream b(row2);
  b >> size >> nodes;
  CHECK(size == 20);
  CHECK(nodes == 20);
}
