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

#ifndef BLUEFISH_DOCUMENT_HPP_
#define BLUEFISH_DOCUMENT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core.hpp"
#include "json.hpp"
#include "registry.hpp"

namespace bluefish {

using Json = nlohmann::json;

inline constexpr int kDocumentVersion = 1;

struct Element {
  std::string kind;
  std::optional<std::string> name;
  Json props = Json::object();
  std::vector<Element> children;
  // Refs only: a name or a path of names.
  std::optional<Json> select;

  friend bool operator==(const Element&, const Element&) = default;
};

struct ElementTree {
  Element root;

  friend bool operator==(const ElementTree&, const ElementTree&) = default;
};

// Throws Error(kSyntaxError) with "line L, column C" or Error(kSchemaError)
// with a JSON-pointer path.
ElementTree parse_document(std::string_view bytes);
Element parse_element(const Json& value, const std::string& pointer);

// Canonical form: sorted keys, two-space indent, empty members omitted.
std::string print_document(const ElementTree& tree);
Json element_to_json(const Element& element);

// Pre-order view of a tree.
struct FlatElement {
  const Element* element = nullptr;
  std::optional<std::size_t> parent;
  std::size_t index_in_parent = 0;
  std::size_t subtree_end = 0;  // one past the last descendant
  std::string path;
};
std::vector<FlatElement> flatten(const ElementTree& tree);

std::vector<std::string> selector_segments(const Element& ref);

std::vector<Diagnostic> validate(const ElementTree& tree,
                                 const Registry& registry);

struct NameTable {
  // Pre-order index of each ref -> pre-order index of its referent.
  std::unordered_map<std::size_t, std::size_t> referents;
  // Nearest strictly enclosing named element per element; nullopt is the
  // document scope.
  std::vector<std::optional<std::size_t>> scope_of;
  std::unordered_map<std::string, std::vector<std::size_t>> by_name;
};

// Resolution failures are appended to `diagnostics`; unresolved refs are
// absent from the table.
NameTable resolve_names(const ElementTree& tree,
                        std::vector<Diagnostic>& diagnostics);

}  // namespace bluefish

#endif  // BLUEFISH_DOCUMENT_HPP_
