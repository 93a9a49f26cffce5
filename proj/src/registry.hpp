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

#ifndef BLUEFISH_REGISTRY_HPP_
#define BLUEFISH_REGISTRY_HPP_

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace bluefish {

using Json = nlohmann::json;

struct Element;
class LayoutContext;
struct PaintInput;
class SvgWriter;

enum class PropType {
  kNumber,
  kString,
  kText,     // string or number, painted verbatim
  kEnum,
  kElement,  // nested element object
  kAny,
};

struct PropSpec {
  std::string name;
  PropType type = PropType::kNumber;
  bool required = false;
  Json default_value;  // null: no default
  std::vector<std::string> choices;        // kEnum
  std::vector<std::string> element_kinds;  // kElement
  double minimum = -std::numeric_limits<double>::infinity();
  bool exclusive_minimum = false;
};

using LayoutFn = std::function<void(LayoutContext&)>;
using PaintFn = std::function<void(const PaintInput&, SvgWriter&)>;
// Macro-style composition: maps a composite element to the subtree it
// stands for. The result may itself contain composite kinds.
using ExpandFn = std::function<Element(const Element&)>;

struct ElementKindSpec {
  std::string kind;
  std::vector<PropSpec> props;
  bool open_props = false;  // accept props not listed in `props`
  std::size_t min_children = 0;
  std::size_t max_children = std::numeric_limits<std::size_t>::max();

  LayoutFn layout;
  PaintFn paint;
  bool paint_after_children = false;

  ExpandFn expand;

  bool is_composite() const { return static_cast<bool>(expand); }
  const PropSpec* prop(std::string_view name) const;
};

class Registry {
 public:
  // Registry holding every standard mark and relation.
  static Registry standard();

  // Throws kDuplicateKind when the kind exists and `override_existing` is
  // false. Throws kSchemaError for an empty kind name or "ref".
  void register_kind(ElementKindSpec spec, bool override_existing = false);

  const ElementKindSpec* find(std::string_view kind) const;
  bool contains(std::string_view kind) const { return find(kind) != nullptr; }
  std::vector<std::string> kinds() const;

 private:
  std::map<std::string, std::shared_ptr<const ElementKindSpec>, std::less<>>
      kinds_;
};

// Fills in defaults for every prop that has one and is absent.
Json with_defaults(const ElementKindSpec& spec, const Json& props);

}  // namespace bluefish

#endif  // BLUEFISH_REGISTRY_HPP_
