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

#include "document.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace bluefish {
namespace {

constexpr std::string_view kElementKeys[] = {"kind", "name", "props",
                                             "children", "select"};

[[noreturn]] void schema_error(const std::string& pointer,
                               const std::string& message) {
  throw Error(Code::kSchemaError, message, {}, {pointer});
}

std::string json_type(const Json& v) { return v.type_name(); }

void check_select(const Json& select, const std::string& pointer) {
  if (select.is_string()) {
    if (select.get_ref<const std::string&>().empty()) {
      schema_error(pointer, "select must not be empty");
    }
    return;
  }
  if (!select.is_array() || select.empty()) {
    schema_error(pointer,
                 "select must be a name or a non-empty array of names");
  }
  for (const auto& segment : select) {
    if (!segment.is_string() ||
        segment.get_ref<const std::string&>().empty()) {
      schema_error(pointer, "select path segments must be non-empty strings");
    }
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  byte = std::min(byte, text.size());
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++column;
    }
  }
  return {line, column};
}

std::string segment_of(const Element& e, std::optional<std::size_t> index) {
  std::string s = e.kind;
  if (index) s += "[" + std::to_string(*index) + "]";
  if (e.name) s += "(" + *e.name + ")";
  return s;
}

Diagnostic make_diag(Code code, std::string message,
                     std::vector<std::string> paths) {
  return Diagnostic{code, Severity::kError, std::move(message),
                    std::move(paths)};
}

void validate_props(const Element& e, const ElementKindSpec& spec,
                    const Registry& registry, const std::string& path,
                    std::vector<Diagnostic>& out);

void validate_nested_element(const Json& value, const PropSpec& prop,
                             const Registry& registry,
                             const std::string& path,
                             std::vector<Diagnostic>& out) {
  Element nested;
  try {
    nested = parse_element(value, path);
  } catch (const Error& err) {
    out.push_back(make_diag(err.code(), err.raw_message(), {path}));
    return;
  }
  if (std::find(prop.element_kinds.begin(), prop.element_kinds.end(),
                nested.kind) == prop.element_kinds.end()) {
    std::string allowed;
    for (const auto& k : prop.element_kinds) {
      allowed += (allowed.empty() ? "" : "|") + k;
    }
    out.push_back(make_diag(Code::kSchemaError,
                            "prop " + prop.name + " must be a " + allowed +
                                " element, got " + nested.kind,
                            {path}));
    return;
  }
  if (nested.name || !nested.children.empty() || nested.select) {
    out.push_back(make_diag(Code::kSchemaError,
                            "prop " + prop.name +
                                " must be a plain mark without name, "
                                "children or select",
                            {path}));
    return;
  }
  const ElementKindSpec* spec = registry.find(nested.kind);
  if (spec == nullptr) {
    out.push_back(make_diag(Code::kUnknownKind,
                            "unknown element kind '" + nested.kind + "'",
                            {path}));
    return;
  }
  // The nested mark is sized by its owner; required extents do not apply.
  ElementKindSpec relaxed = *spec;
  for (auto& p : relaxed.props) p.required = false;
  validate_props(nested, relaxed, registry, path, out);
}

void validate_props(const Element& e, const ElementKindSpec& spec,
                    const Registry& registry, const std::string& path,
                    std::vector<Diagnostic>& out) {
  for (const auto& [key, value] : e.props.items()) {
    const PropSpec* prop = spec.prop(key);
    if (prop == nullptr) {
      if (!spec.open_props) {
        out.push_back(make_diag(Code::kSchemaError,
                                "unknown prop '" + key + "' for " + e.kind,
                                {path}));
      }
      continue;
    }
    switch (prop->type) {
      case PropType::kNumber: {
        if (!value.is_number()) {
          out.push_back(make_diag(Code::kSchemaError,
                                  "prop " + key + " must be a number, got " +
                                      json_type(value),
                                  {path}));
          break;
        }
        const double v = value.get<double>();
        if (v < prop->minimum ||
            (prop->exclusive_minimum && v == prop->minimum)) {
          out.push_back(make_diag(
              Code::kSchemaError,
              "prop " + key + " must be " +
                  (prop->exclusive_minimum ? "greater than " : "at least ") +
                  Json(prop->minimum).dump(),
              {path}));
        }
        break;
      }
      case PropType::kString:
        if (!value.is_string()) {
          out.push_back(make_diag(Code::kSchemaError,
                                  "prop " + key + " must be a string, got " +
                                      json_type(value),
                                  {path}));
        }
        break;
      case PropType::kText:
        if (!value.is_string() && !value.is_number()) {
          out.push_back(make_diag(Code::kSchemaError,
                                  "prop " + key +
                                      " must be a string or number, got " +
                                      json_type(value),
                                  {path}));
        }
        break;
      case PropType::kEnum: {
        if (!value.is_string() ||
            std::find(prop->choices.begin(), prop->choices.end(),
                      value.get<std::string>()) == prop->choices.end()) {
          std::string allowed;
          for (const auto& c : prop->choices) {
            allowed += (allowed.empty() ? "" : "|") + c;
          }
          out.push_back(make_diag(Code::kBadEnumValue,
                                  "prop " + key + " of " + e.kind + " is " +
                                      value.dump() + "; expected one of " +
                                      allowed,
                                  {path}));
        }
        break;
      }
      case PropType::kElement:
        validate_nested_element(value, *prop, registry, path + "/" + key,
                                out);
        break;
      case PropType::kAny:
        break;
    }
  }
  for (const auto& prop : spec.props) {
    if (prop.required && !e.props.contains(prop.name)) {
      out.push_back(make_diag(Code::kMissingProp,
                              e.kind + " requires prop '" + prop.name + "'",
                              {path}));
    }
  }
}

}  // namespace

Element parse_element(const Json& value, const std::string& pointer) {
  if (!value.is_object()) {
    schema_error(pointer, "element must be an object, got " + json_type(value));
  }
  for (const auto& [key, _] : value.items()) {
    if (std::find(std::begin(kElementKeys), std::end(kElementKeys), key) ==
        std::end(kElementKeys)) {
      schema_error(pointer, "unknown element key '" + key + "'");
    }
  }
  Element e;
  const auto kind = value.find("kind");
  if (kind == value.end() || !kind->is_string() ||
      kind->get_ref<const std::string&>().empty()) {
    schema_error(pointer, "element requires a non-empty string 'kind'");
  }
  e.kind = kind->get<std::string>();
  if (const auto name = value.find("name"); name != value.end()) {
    if (!name->is_string() || name->get_ref<const std::string&>().empty()) {
      schema_error(pointer + "/name", "name must be a non-empty string");
    }
    e.name = name->get<std::string>();
  }
  if (const auto props = value.find("props"); props != value.end()) {
    if (!props->is_object()) {
      schema_error(pointer + "/props", "props must be an object");
    }
    for (const auto& [key, v] : props->items()) {
      const std::string at = pointer + "/props/" + key;
      if (v.is_object()) {
        parse_element(v, at);  // structural check only
      } else if (!v.is_number() && !v.is_string() && !v.is_boolean()) {
        schema_error(at, "prop values must be scalars or element objects, got " +
                             json_type(v));
      }
    }
    e.props = *props;
  }
  if (const auto children = value.find("children"); children != value.end()) {
    if (!children->is_array()) {
      schema_error(pointer + "/children", "children must be an array");
    }
    e.children.reserve(children->size());
    for (std::size_t i = 0; i < children->size(); ++i) {
      e.children.push_back(parse_element(
          (*children)[i], pointer + "/children/" + std::to_string(i)));
    }
  }
  if (const auto select = value.find("select"); select != value.end()) {
    check_select(*select, pointer + "/select");
    e.select = *select;
  }
  return e;
}

ElementTree parse_document(std::string_view bytes) {
  Json doc;
  try {
    doc = Json::parse(bytes.begin(), bytes.end());
  } catch (const Json::parse_error& err) {
    const auto [line, column] =
        line_column(bytes, err.byte == 0 ? 0 : err.byte - 1);
    std::string what = err.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) {
      what = what.substr(pos);
    }
    throw Error(Code::kSyntaxError,
                "line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + what,
                {}, {"line " + std::to_string(line) + ":" +
                     std::to_string(column)});
  }
  if (!doc.is_object()) schema_error("", "document must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "bluefish" && key != "root") {
      schema_error("/" + key, "unknown top-level key '" + key + "'");
    }
  }
  const auto version = doc.find("bluefish");
  if (version == doc.end()) {
    schema_error("/bluefish", "missing format version 'bluefish'");
  }
  if (!version->is_number_integer() || version->get<long long>() != 1) {
    schema_error("/bluefish",
                 "unsupported format version " + version->dump() +
                     " (expected 1)");
  }
  const auto root = doc.find("root");
  if (root == doc.end()) schema_error("/root", "missing 'root' element");
  return ElementTree{parse_element(*root, "/root")};
}

Json element_to_json(const Element& e) {
  Json out = Json::object();
  out["kind"] = e.kind;
  if (e.name) out["name"] = *e.name;
  if (!e.props.empty()) out["props"] = e.props;
  if (!e.children.empty()) {
    Json children = Json::array();
    for (const auto& child : e.children) {
      children.push_back(element_to_json(child));
    }
    out["children"] = std::move(children);
  }
  if (e.select) out["select"] = *e.select;
  return out;
}

std::string print_document(const ElementTree& tree) {
  Json doc = Json::object();
  doc["bluefish"] = kDocumentVersion;
  doc["root"] = element_to_json(tree.root);
  return doc.dump(2) + "\n";
}

std::vector<FlatElement> flatten(const ElementTree& tree) {
  std::vector<FlatElement> out;
  struct Frame {
    const Element* element;
    std::optional<std::size_t> parent;
    std::size_t index;
  };
  std::vector<Frame> stack{{&tree.root, std::nullopt, 0}};
  // Iterative pre-order; subtree ends are patched on the way.
  std::vector<std::size_t> open;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const std::size_t idx = out.size();
    FlatElement flat;
    flat.element = f.element;
    flat.parent = f.parent;
    flat.index_in_parent = f.index;
    flat.path = f.parent ? out[*f.parent].path + "/" +
                               segment_of(*f.element, f.index)
                         : segment_of(*f.element, std::nullopt);
    out.push_back(std::move(flat));
    const auto& children = f.element->children;
    for (std::size_t i = children.size(); i-- > 0;) {
      stack.push_back({&children[i], idx, i});
    }
  }
  // Subtree ends: process in reverse so children are done before parents.
  for (std::size_t i = out.size(); i-- > 0;) {
    if (out[i].subtree_end == 0) out[i].subtree_end = i + 1;
    if (const auto p = out[i].parent) {
      out[*p].subtree_end = std::max(out[*p].subtree_end, out[i].subtree_end);
    }
  }
  return out;
}

std::vector<std::string> selector_segments(const Element& ref) {
  std::vector<std::string> out;
  if (!ref.select) return out;
  if (ref.select->is_string()) {
    out.push_back(ref.select->get<std::string>());
  } else if (ref.select->is_array()) {
    for (const auto& s : *ref.select) {
      if (s.is_string()) out.push_back(s.get<std::string>());
    }
  }
  return out;
}

std::vector<Diagnostic> validate(const ElementTree& tree,
                                 const Registry& registry) {
  std::vector<Diagnostic> out;
  const auto flat = flatten(tree);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const Element& e = *flat[i].element;
    const std::string& path = flat[i].path;
    if (e.kind == "ref") {
      if (i == 0) {
        out.push_back(make_diag(Code::kSchemaError,
                                "the document root cannot be a ref", {path}));
      }
      if (!e.children.empty()) {
        out.push_back(make_diag(Code::kRefWithChildren,
                                "ref elements are leaves and cannot have "
                                "children",
                                {path}));
      }
      if (e.name) {
        out.push_back(make_diag(Code::kSchemaError,
                                "ref elements cannot be named", {path}));
      }
      if (!e.props.empty()) {
        out.push_back(
            make_diag(Code::kSchemaError, "ref elements take no props", {path}));
      }
      if (!e.select) {
        out.push_back(make_diag(Code::kMissingProp,
                                "ref requires 'select'", {path}));
      }
      continue;
    }
    if (e.select) {
      out.push_back(make_diag(Code::kSchemaError,
                              "only ref elements take 'select'", {path}));
    }
    const ElementKindSpec* spec = registry.find(e.kind);
    if (spec == nullptr) {
      out.push_back(make_diag(Code::kUnknownKind,
                              "unknown element kind '" + e.kind + "'",
                              {path}));
      continue;
    }
    validate_props(e, *spec, registry, path, out);
    const std::size_t n = e.children.size();
    if (n < spec->min_children || n > spec->max_children) {
      std::string expected;
      if (spec->min_children == spec->max_children) {
        expected = "exactly " + std::to_string(spec->min_children);
      } else if (spec->max_children == std::numeric_limits<std::size_t>::max()) {
        expected = "at least " + std::to_string(spec->min_children);
      } else {
        expected = "between " + std::to_string(spec->min_children) + " and " +
                   std::to_string(spec->max_children);
      }
      out.push_back(make_diag(Code::kSchemaError,
                              e.kind + " takes " + expected +
                                  " children, got " + std::to_string(n),
                              {path}));
    }
  }
  return out;
}

NameTable resolve_names(const ElementTree& tree,
                        std::vector<Diagnostic>& diagnostics) {
  const auto flat = flatten(tree);
  NameTable table;
  table.scope_of.resize(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (const auto p = flat[i].parent) {
      table.scope_of[i] =
          flat[*p].element->name ? std::optional(*p) : table.scope_of[*p];
    }
    if (const auto& name = flat[i].element->name) {
      table.by_name[*name].push_back(i);
    }
  }

  // Sorted for deterministic diagnostic order.
  std::map<std::pair<std::string, std::size_t>, std::vector<std::size_t>>
      scoped;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (const auto& name = flat[i].element->name) {
      const std::size_t scope =
          table.scope_of[i] ? *table.scope_of[i] + 1 : 0;
      scoped[{*name, scope}].push_back(i);
    }
  }
  std::vector<std::pair<std::size_t, Diagnostic>> duplicates;
  for (const auto& [key, members] : scoped) {
    if (members.size() < 2) continue;
    std::vector<std::string> paths;
    for (auto m : members) paths.push_back(flat[m].path);
    duplicates.emplace_back(
        members.front(),
        make_diag(Code::kDuplicateNameInScope,
                  "name '" + key.first + "' is declared " +
                      std::to_string(members.size()) + " times in one scope",
                  std::move(paths)));
  }
  std::sort(duplicates.begin(), duplicates.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [_, d] : duplicates) diagnostics.push_back(std::move(d));

  const auto inside = [&](std::size_t node, std::size_t ancestor) {
    return node > ancestor && node < flat[ancestor].subtree_end;
  };

  for (std::size_t i = 0; i < flat.size(); ++i) {
    const Element& e = *flat[i].element;
    if (e.kind != "ref" || !e.select) continue;
    const auto segments = selector_segments(e);
    const std::string selector = e.select->dump();
    std::optional<std::size_t> current;
    bool failed = false;
    for (std::size_t s = 0; s < segments.size() && !failed; ++s) {
      const auto found = table.by_name.find(segments[s]);
      std::vector<std::size_t> candidates;
      if (found != table.by_name.end()) {
        if (!current) {
          candidates = found->second;
        } else {
          std::vector<std::size_t> local;
          for (auto c : found->second) {
            if (!inside(c, *current)) continue;
            candidates.push_back(c);
            if (table.scope_of[c] == current) local.push_back(c);
          }
          if (!local.empty()) candidates = std::move(local);
        }
      }
      if (candidates.empty()) {
        diagnostics.push_back(make_diag(
            Code::kUnresolvedName,
            "selector " + selector + ": no element named '" + segments[s] +
                "'" +
                (current ? " inside " + flat[*current].path : std::string()),
            {flat[i].path}));
        failed = true;
      } else if (candidates.size() > 1) {
        std::vector<std::string> paths{flat[i].path};
        for (auto c : candidates) paths.push_back(flat[c].path);
        diagnostics.push_back(make_diag(
            Code::kAmbiguousName,
            "selector " + selector + ": name '" + segments[s] + "' matches " +
                std::to_string(candidates.size()) + " elements",
            std::move(paths)));
        failed = true;
      } else {
        current = candidates.front();
      }
    }
    if (failed || !current) continue;
    const std::size_t referent = *current;
    if (inside(i, referent)) {
      diagnostics.push_back(make_diag(
          Code::kSelfReference,
          "selector " + selector + " selects an ancestor of the ref",
          {flat[i].path, flat[referent].path}));
      continue;
    }
    if (referent > i) {
      diagnostics.push_back(make_diag(
          Code::kForwardReference,
          "selector " + selector +
              " refers to an element declared later in the document",
          {flat[i].path, flat[referent].path}));
      continue;
    }
    table.referents[i] = referent;
  }
  return table;
}

}  // namespace bluefish
