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

#include "engine.hpp"

#include <algorithm>
#include <exception>
#include <utility>

#include "relations.hpp"

namespace bluefish {
namespace {

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

void append(std::vector<Diagnostic>& to, std::vector<Diagnostic> from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()),
            std::make_move_iterator(from.end()));
}

std::string child_path(const std::string& parent, const Element& e,
                       std::size_t index) {
  std::string s = parent + "/" + e.kind + "[" + std::to_string(index) + "]";
  if (e.name) s += "(" + *e.name + ")";
  return s;
}

bool has_composites(const Registry& registry) {
  for (const auto& kind : registry.kinds()) {
    if (registry.find(kind)->is_composite()) return true;
  }
  return false;
}

Element expand(const Element& e, const Registry& registry,
               const std::string& path, int depth) {
  const ElementKindSpec* spec =
      e.kind == "ref" ? nullptr : registry.find(e.kind);
  if (spec != nullptr && spec->is_composite()) {
    if (depth >= kMaxExpansionDepth) {
      throw Error(Code::kSchemaError,
                  "expansion of '" + e.kind + "' nests deeper than " +
                      std::to_string(kMaxExpansionDepth) + " levels",
                  {}, {path});
    }
    Element input = e;
    input.props = with_defaults(*spec, e.props);
    Element out;
    try {
      out = spec->expand(input);
    } catch (const Error& err) {
      if (!err.paths().empty()) throw;
      throw Error(err.code(),
                  "expanding '" + e.kind + "': " + err.raw_message(), {},
                  {path});
    }
    if (e.name) out.name = e.name;
    return expand(out, registry, path, depth + 1);
  }
  Element out;
  out.kind = e.kind;
  out.name = e.name;
  out.props = e.props;
  out.select = e.select;
  out.children.reserve(e.children.size());
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    out.children.push_back(expand(e.children[i], registry,
                                  child_path(path, e.children[i], i), depth));
  }
  return out;
}

struct Missing {};

Json substitute(const Json& t, const Element& e, bool in_props);

Json substitute_value(const Json& t, const Element& e) {
  if (t.is_string()) {
    const auto& s = t.get_ref<const std::string&>();
    if (s.size() > 1 && s.front() == '$') {
      const auto it = e.props.find(s.substr(1));
      if (it == e.props.end()) throw Missing{};
      return *it;
    }
    return t;
  }
  return substitute(t, e, false);
}

Json substitute(const Json& t, const Element& e, bool in_props) {
  if (t.is_array()) {
    Json out = Json::array();
    for (const auto& item : t) {
      if (item.is_object() && item.value("kind", "") == "$children") {
        for (const auto& child : e.children) {
          out.push_back(element_to_json(child));
        }
        continue;
      }
      out.push_back(substitute_value(item, e));
    }
    return out;
  }
  if (t.is_object()) {
    Json out = Json::object();
    for (const auto& [key, value] : t.items()) {
      try {
        out[key] = key == "props" ? substitute(value, e, true)
                                  : substitute_value(value, e);
      } catch (const Missing&) {
        if (!in_props) throw;
      }
    }
    return out;
  }
  if (t.is_string()) return substitute_value(t, e);
  return t;
}

class LayoutRun final : public LayoutDriver {
 public:
  LayoutRun(Scenegraph& graph, const Registry& registry, LayoutOutcome& out)
      : graph_(graph), registry_(registry), out_(out) {}

  void layout_node(NodeId id) override {
    if (++out_.invocations[id.value] > 1) {
      throw Error(Code::kInternal, "{0} was laid out twice", {id});
    }
    const ElementKindSpec* spec = registry_.find(graph_.node(id).kind);
    if (spec == nullptr || !spec->layout) {
      throw Error(Code::kInternal, "{0} has no layout function", {id});
    }
    LayoutContext ctx(graph_, id, *this);
    spec->layout(ctx);
  }

  void warn(Code code, std::string message,
            std::vector<NodeId> nodes) override {
    Diagnostic d =
        to_diagnostic(Error(code, std::move(message), std::move(nodes)),
                      &graph_);
    d.severity = Severity::kWarning;
    out_.diagnostics.push_back(std::move(d));
  }

 private:
  Scenegraph& graph_;
  const Registry& registry_;
  LayoutOutcome& out_;
};

Diagnostic internal_diagnostic(const std::exception& e,
                               const Scenegraph* graph) {
  std::string path = "<document>";
  if (graph != nullptr && graph->has_root()) {
    path = graph->node(graph->root()).path;
  }
  return Diagnostic{Code::kInternal, Severity::kError,
                    std::string("internal error: ") + e.what(), {path}};
}

}  // namespace

ElementTree expand_composites(const ElementTree& tree,
                              const Registry& registry) {
  std::string root_path = tree.root.kind;
  if (tree.root.name) root_path += "(" + *tree.root.name + ")";
  return ElementTree{expand(tree.root, registry, root_path, 0)};
}

ExpandFn template_expansion(Json element_template) {
  return [t = std::move(element_template)](const Element& e) {
    Json expanded;
    try {
      expanded = substitute(t, e, false);
    } catch (const Missing&) {
      throw Error(Code::kMissingProp,
                  "the template of '" + e.kind +
                      "' uses a prop the element does not set");
    }
    return parse_element(expanded, "");
  };
}

Scenegraph build_scenegraph(const ElementTree& tree, const NameTable& names,
                            const Registry& registry) {
  const auto flat = flatten(tree);
  Scenegraph graph;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const Element& e = *flat[i].element;
    const auto parent =
        flat[i].parent ? std::optional(NodeId{static_cast<std::uint32_t>(
                             *flat[i].parent)})
                       : std::nullopt;
    NodeId id;
    try {
      if (e.kind == "ref") {
        const auto it = names.referents.find(i);
        if (it == names.referents.end() || !parent) {
          throw Error(Code::kUnresolvedName, "unresolved ref", {}, {});
        }
        id = graph.create_ref(*parent,
                              NodeId{static_cast<std::uint32_t>(it->second)});
      } else {
        const ElementKindSpec* spec = registry.find(e.kind);
        if (spec == nullptr) {
          throw Error(Code::kUnknownKind,
                      "unknown element kind '" + e.kind + "'");
        }
        id = graph.create_node(e.kind, parent, with_defaults(*spec, e.props));
      }
    } catch (const Error& err) {
      std::vector<std::string> paths{flat[i].path};
      const std::string message =
          err.format([&](NodeId n) -> std::string {
            if (n.value < flat.size()) {
              if (n.value != i) paths.push_back(flat[n.value].path);
              return flat[n.value].path;
            }
            return "#" + std::to_string(n.value);
          });
      throw Error(err.code(), message, {}, std::move(paths));
    }
    if (id.value != i) {
      throw Error(Code::kInternal, "node ids diverge from element order", {},
                  {flat[i].path});
    }
    Node& node = graph.node(id);
    node.name = e.name;
    node.path = flat[i].path;
  }
  return graph;
}

bool LayoutOutcome::ok() const { return !has_errors(diagnostics); }

LayoutOutcome layout_document(Scenegraph& graph, const Registry& registry) {
  LayoutOutcome out;
  out.invocations.assign(graph.size(), 0);
  try {
    LayoutRun run(graph, registry, out);
    run.layout_node(graph.root());
    graph.finalize();
    for (const Node& n : graph.nodes()) {
      if (!n.is_ref && out.invocations[n.id.value] != 1) {
        throw Error(Code::kInternal, "{0} was never laid out", {n.id});
      }
    }
  } catch (const Error& err) {
    out.diagnostics.push_back(to_diagnostic(err, &graph));
  } catch (const std::exception& e) {
    out.diagnostics.push_back(internal_diagnostic(e, &graph));
  }
  return out;
}

Diagnostic to_diagnostic(const Error& error, const Scenegraph* graph) {
  Diagnostic d;
  d.code = error.code();
  d.severity = Severity::kError;
  const auto name_of = [&](NodeId id) -> std::string {
    if (graph != nullptr && graph->contains(id)) return graph->node(id).path;
    return "#" + std::to_string(id.value);
  };
  d.message = error.format(name_of);
  for (NodeId id : error.nodes()) {
    std::string p = name_of(id);
    if (std::find(d.paths.begin(), d.paths.end(), p) == d.paths.end()) {
      d.paths.push_back(std::move(p));
    }
  }
  for (const auto& p : error.paths()) {
    if (std::find(d.paths.begin(), d.paths.end(), p) == d.paths.end()) {
      d.paths.push_back(p);
    }
  }
  if (d.paths.empty()) {
    d.paths.push_back(graph != nullptr && graph->has_root()
                          ? graph->node(graph->root()).path
                          : "<document>");
  }
  return d;
}

bool CompileResult::ok() const { return !has_errors(diagnostics); }

CompileResult Engine::compile(std::string_view document,
                              const CompileOptions& options) const {
  CompileResult r;
  ElementTree tree;
  try {
    tree = parse_document(document);
  } catch (const Error& err) {
    r.diagnostics.push_back(to_diagnostic(err, nullptr));
    return r;
  } catch (const std::exception& e) {
    r.diagnostics.push_back(internal_diagnostic(e, nullptr));
    return r;
  }

  append(r.diagnostics, validate(tree, registry_));
  if (!r.ok()) return r;

  if (has_composites(registry_)) {
    try {
      tree = expand_composites(tree, registry_);
    } catch (const Error& err) {
      r.diagnostics.push_back(to_diagnostic(err, nullptr));
      return r;
    }
    append(r.diagnostics, validate(tree, registry_));
    if (!r.ok()) return r;
  }

  const NameTable names = resolve_names(tree, r.diagnostics);
  if (!r.ok()) return r;

  try {
    r.graph = build_scenegraph(tree, names, registry_);
  } catch (const Error& err) {
    r.diagnostics.push_back(to_diagnostic(err, nullptr));
    return r;
  }

  LayoutOutcome outcome = layout_document(*r.graph, registry_);
  append(r.diagnostics, std::move(outcome.diagnostics));
  r.invocations = std::move(outcome.invocations);
  if (!r.ok()) return r;

  try {
    r.scene = resolve_scene(*r.graph);
    if (options.svg) r.svg = paint(*r.scene, registry_);
    if (options.dump) r.dump = dump_scene(*r.scene);
  } catch (const Error& err) {
    r.diagnostics.push_back(to_diagnostic(err, &*r.graph));
  } catch (const std::exception& e) {
    r.diagnostics.push_back(internal_diagnostic(e, &*r.graph));
  }
  return r;
}

}  // namespace bluefish
