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

#include "registry.hpp"

#include "core.hpp"
#include "relations.hpp"

namespace bluefish {

const PropSpec* ElementKindSpec::prop(std::string_view name) const {
  for (const auto& p : props) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

Registry Registry::standard() {
  Registry registry;
  register_standard_kinds(registry);
  return registry;
}

void Registry::register_kind(ElementKindSpec spec, bool override_existing) {
  if (spec.kind.empty() || spec.kind == "ref" || spec.kind.front() == '$') {
    throw Error(Code::kSchemaError,
                "'" + spec.kind + "' cannot be used as an element kind");
  }
  const auto it = kinds_.find(spec.kind);
  if (it != kinds_.end() && !override_existing) {
    throw Error(Code::kDuplicateKind,
                "element kind '" + spec.kind + "' is already registered");
  }
  auto ptr = std::make_shared<const ElementKindSpec>(std::move(spec));
  kinds_.insert_or_assign(ptr->kind, std::move(ptr));
}

const ElementKindSpec* Registry::find(std::string_view kind) const {
  const auto it = kinds_.find(kind);
  return it == kinds_.end() ? nullptr : it->second.get();
}

std::vector<std::string> Registry::kinds() const {
  std::vector<std::string> out;
  out.reserve(kinds_.size());
  for (const auto& [kind, spec] : kinds_) out.push_back(kind);
  return out;
}

Json with_defaults(const ElementKindSpec& spec, const Json& props) {
  Json out = props.is_object() ? props : Json::object();
  for (const auto& p : spec.props) {
    if (!p.default_value.is_null() && !out.contains(p.name)) {
      out[p.name] = p.default_value;
    }
  }
  return out;
}

}  // namespace bluefish
