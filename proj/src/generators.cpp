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

#include "generators.hpp"

#include <cstdint>

#include "json.hpp"

namespace bluefish {
namespace {

using Json = nlohmann::json;

constexpr std::size_t kBranching = 8;

Json nested_node(std::size_t i, std::size_t n, std::size_t depth) {
  if (kBranching * i + 1 >= n) {
    return Json{{"kind", "rect"},
                {"props",
                 {{"width", 10 + static_cast<int>(i % 5)},
                  {"height", 10 + static_cast<int>(i % 3)}}}};
  }
  Json children = Json::array();
  for (std::size_t c = kBranching * i + 1;
       c <= kBranching * i + kBranching && c < n; ++c) {
    children.push_back(nested_node(c, n, depth + 1));
  }
  return Json{{"kind", depth % 2 == 0 ? "stackV" : "stackH"},
              {"props", {{"spacing", 2}}},
              {"children", std::move(children)}};
}

std::string document(Json root) {
  return Json{{"bluefish", 1}, {"root", std::move(root)}}.dump() + "\n";
}

}  // namespace

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = {"insertion-sort-like",
                                                 "nested-stacks"};
  return names;
}

std::optional<std::string> generate_document(std::string_view generator,
                                             std::size_t nodes) {
  if (nodes == 0) return std::nullopt;
  if (generator == "nested-stacks") return nested_stacks(nodes);
  if (generator == "insertion-sort-like") {
    return insertion_sort_like(insertion_sort_like_rows(nodes));
  }
  return std::nullopt;
}

std::string nested_stacks(std::size_t nodes) {
  return document(nested_node(0, nodes == 0 ? 1 : nodes, 0));
}

std::size_t insertion_sort_like_node_count(std::size_t n) {
  return n * n + 4 * n - 1;
}

std::size_t insertion_sort_like_rows(std::size_t nodes) {
  std::size_t best = 1;
  for (std::size_t n = 1;; ++n) {
    const std::size_t count = insertion_sort_like_node_count(n);
    const auto diff = [&](std::size_t c) {
      return c > nodes ? c - nodes : nodes - c;
    };
    if (diff(count) < diff(insertion_sort_like_node_count(best))) best = n;
    if (count >= nodes) return best;
  }
}

std::string insertion_sort_like(std::size_t n) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < n; ++k) {
    Json cells = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      // Values of a partially sorted array, drawn as bars.
      const auto value = static_cast<int>((j * 7 + k * 3) % n + 1);
      cells.push_back({{"kind", "rect"},
                       {"name", "c" + std::to_string(j)},
                       {"props",
                        {{"width", 20}, {"height", 4 * value + 4},
                         {"fill", j <= k ? "steelblue" : "lightgray"}}}});
    }
    rows.push_back({{"kind", "stackH"},
                    {"name", "row" + std::to_string(k)},
                    {"props", {{"spacing", 5}, {"alignment", "bottom"}}},
                    {"children", std::move(cells)}});
  }
  Json children = Json::array();
  children.push_back({{"kind", "stackV"},
                      {"props", {{"spacing", 30}}},
                      {"children", std::move(rows)}});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::string cell = "c" + std::to_string(k + 1);
    children.push_back(
        {{"kind", "arrow"},
         {"children",
          {{{"kind", "ref"},
            {"select", {"row" + std::to_string(k), cell}}},
           {{"kind", "ref"},
            {"select", {"row" + std::to_string(k + 1), cell}}}}}});
  }
  return document({{"kind", "group"}, {"children", std::move(children)}});
}

}  // namespace bluefish
