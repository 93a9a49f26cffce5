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

// Command-line front end: render, check and bench diagram documents.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "bluefish/bluefish.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

namespace fs = std::filesystem;

struct EngineHandle {
  bf_engine* ptr = nullptr;
  ~EngineHandle() { bf_engine_destroy(ptr); }
};

struct ResultHandle {
  bf_result* ptr = nullptr;
  ~ResultHandle() { bf_result_destroy(ptr); }
};

bool use_color() {
  return std::getenv("BLUEFISH_NO_COLOR") == nullptr && isatty(STDERR_FILENO);
}

void print_diagnostics(const bf_result* result) {
  const bool color = use_color();
  const size_t n = bf_result_diagnostic_count(result);
  for (size_t i = 0; i < n; ++i) {
    const bool warning =
        bf_result_diagnostic_severity(result, i) == BF_SEVERITY_WARNING;
    const char* label = warning ? "warning" : "error";
    if (color) {
      std::cerr << (warning ? "\x1b[1;33m" : "\x1b[1;31m") << label
                << "\x1b[0m";
    } else {
      std::cerr << label;
    }
    std::cerr << '[' << bf_result_diagnostic_code(result, i)
              << "]: " << bf_result_diagnostic_message(result, i) << '\n';
    const size_t paths = bf_result_diagnostic_path_count(result, i);
    for (size_t p = 0; p < paths; ++p) {
      std::cerr << "  at " << bf_result_diagnostic_path(result, i, p) << '\n';
    }
  }
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

bool write_file(const fs::path& path, const char* data, size_t length) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(data, static_cast<std::streamsize>(length));
  return static_cast<bool>(out);
}

// Compiles `path`; returns the exit code and leaves the result in `result`.
int compile_file(const std::string& path, uint32_t flags,
                 ResultHandle& result) {
  const auto doc = read_file(path);
  if (!doc) {
    std::cerr << "error: cannot read " << path << '\n';
    return kExitUsage;
  }
  EngineHandle engine;
  if (bf_engine_create(&engine.ptr) != BF_OK) {
    std::cerr << "error: " << bf_last_error() << '\n';
    return kExitUsage;
  }
  const bf_status status =
      bf_compile(engine.ptr, doc->data(), doc->size(), flags, &result.ptr);
  if (result.ptr == nullptr) {
    std::cerr << "error: " << bf_status_message(status) << ": "
              << bf_last_error() << '\n';
    return kExitUsage;
  }
  print_diagnostics(result.ptr);
  return bf_result_ok(result.ptr) ? kExitOk : kExitDiagnostics;
}

int cmd_render(const std::string& input, const std::string& out_arg,
               bool dump) {
  ResultHandle result;
  const uint32_t flags = BF_EMIT_SVG | (dump ? BF_EMIT_DUMP : 0u);
  if (const int code = compile_file(input, flags, result); code != kExitOk) {
    return code;
  }
  fs::path out = out_arg.empty() ? fs::path(input).replace_extension(".svg")
                                 : fs::path(out_arg);
  size_t length = 0;
  const char* svg = bf_result_svg(result.ptr, &length);
  if (!write_file(out, svg, length)) {
    std::cerr << "error: cannot write " << out.string() << '\n';
    return kExitUsage;
  }
  if (dump) {
    const fs::path dump_path = fs::path(out).replace_extension(".scene.json");
    const char* text = bf_result_dump(result.ptr, &length);
    if (!write_file(dump_path, text, length)) {
      std::cerr << "error: cannot write " << dump_path.string() << '\n';
      return kExitUsage;
    }
  }
  return kExitOk;
}

int cmd_check(const std::string& input) {
  ResultHandle result;
  const int code = compile_file(input, 0, result);
  if (code == kExitOk) std::cout << "ok\n";
  return code;
}

int cmd_bench(const std::string& generator, const std::vector<size_t>& sizes,
              int reps) {
  if (sizes.empty() || reps < 1 ||
      std::find(sizes.begin(), sizes.end(), size_t{0}) != sizes.end()) {
    std::cerr << "error: sizes and reps must be positive\n";
    return kExitUsage;
  }
  EngineHandle engine;
  if (bf_engine_create(&engine.ptr) != BF_OK) {
    std::cerr << "error: " << bf_last_error() << '\n';
    return kExitUsage;
  }
  // Generate every document first so a bad generator fails before output.
  using Owned = std::unique_ptr<char, decltype(&bf_string_free)>;
  std::vector<std::pair<Owned, size_t>> docs;
  for (size_t size : sizes) {
    char* doc = nullptr;
    size_t length = 0;
    if (bf_generate_document(generator.c_str(), size, &doc, &length) !=
        BF_OK) {
      std::cerr << "error: " << bf_last_error() << '\n';
      return kExitUsage;
    }
    docs.emplace_back(Owned(doc, &bf_string_free), length);
  }
  std::printf("%-10s %-10s %s\n", "size", "nodes", "median_ms");
  for (size_t i = 0; i < sizes.size(); ++i) {
    const size_t size = sizes[i];
    const char* doc = docs[i].first.get();
    const size_t length = docs[i].second;
    std::vector<double> times;
    size_t nodes = 0;
    for (int r = 0; r < reps; ++r) {
      ResultHandle result;
      const auto start = std::chrono::steady_clock::now();
      bf_compile(engine.ptr, doc, length, BF_EMIT_SVG, &result.ptr);
      const auto stop = std::chrono::steady_clock::now();
      if (result.ptr == nullptr || !bf_result_ok(result.ptr)) {
        if (result.ptr != nullptr) print_diagnostics(result.ptr);
        return kExitDiagnostics;
      }
      nodes = bf_result_node_count(result.ptr);
      times.push_back(
          std::chrono::duration<double, std::milli>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    const size_t mid = times.size() / 2;
    const double median = times.size() % 2 == 1
                              ? times[mid]
                              : (times[mid - 1] + times[mid]) / 2;
    std::printf("%-10zu %-10zu %.3f\n", size, nodes, median);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bluefish diagram layout engine"};
  app.name("bluefish");
  app.require_subcommand(1);

  std::string input;
  std::string out;
  bool dump = false;
  auto* render = app.add_subcommand("render", "Render a document to SVG");
  render->add_option("input", input, "Document path")->required();
  render->add_option("--out", out, "Output SVG path");
  render->add_flag("--dump", dump, "Also write the scene dump");

  auto* check = app.add_subcommand("check", "Validate and lay out");
  check->add_option("input", input, "Document path")->required();

  std::string generator;
  std::vector<size_t> sizes;
  int reps = 5;
  auto* bench = app.add_subcommand("bench", "Time synthetic documents");
  bench->add_option("generator", generator, "nested-stacks | insertion-sort-like")
      ->required();
  bench->add_option("--sizes", sizes, "Node counts, comma separated")
      ->required()
      ->delimiter(',');
  bench->add_option("--reps", reps, "Repetitions per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*render) return cmd_render(input, out, dump);
  if (*check) return cmd_check(input);
  return cmd_bench(generator, sizes, reps);
}
