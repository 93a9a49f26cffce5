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

#include "renderer.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "relations.hpp"
#include "svg.hpp"

namespace bluefish {
namespace {

std::string num(double v) { return format_number(v); }

std::string quoted(const std::string& s) { return Json(s).dump(); }

void paint_node(const ResolvedScene& scene, const Registry& registry,
                const ResolvedNode& n, SvgWriter& out) {
  if (n.ref) return;
  SvgWriter::Attrs attrs;
  if (num(n.translate_x) != "0" || num(n.translate_y) != "0") {
    attrs.emplace_back("transform", "translate(" + num(n.translate_x) + " " +
                                        num(n.translate_y) + ")");
  }
  out.open("g", std::move(attrs));
  const ElementKindSpec* spec = registry.find(n.kind);
  const PaintFn* fn = spec != nullptr && spec->paint ? &spec->paint : nullptr;
  const PaintInput input{n.id, n.paint_props, n.local_x, n.local_y};
  if (fn != nullptr && !spec->paint_after_children) (*fn)(input, out);
  for (NodeId child : n.children) {
    paint_node(scene, registry, scene.nodes[child.value], out);
  }
  if (fn != nullptr && spec->paint_after_children) (*fn)(input, out);
  out.close("g");
}

std::string owners_json(const BBoxOwners& owners) {
  std::map<std::string_view, std::uint32_t> sorted;
  for (Dim d : kAllDims) {
    if (const auto o = owners[d]) sorted.emplace(dim_name(d), o->value);
  }
  std::string s = "{";
  for (const auto& [k, v] : sorted) {
    if (s.size() > 1) s += ", ";
    s += "\"" + std::string(k) + "\": " + std::to_string(v);
  }
  return s + "}";
}

std::string node_json(const ResolvedNode& n) {
  std::string children = "[";
  for (NodeId c : n.children) {
    if (children.size() > 1) children += ", ";
    children += std::to_string(c.value);
  }
  children += "]";
  std::string s = "{";
  if (!n.ref) s += "\"bboxOwners\": " + owners_json(n.bbox_owners) + ", ";
  s += "\"children\": " + children + ", ";
  if (!n.ref) s += "\"height\": " + num(n.height) + ", ";
  s += "\"id\": " + std::to_string(n.id.value) + ", ";
  s += "\"kind\": " + quoted(n.kind) + ", ";
  if (n.name) s += "\"name\": " + quoted(*n.name) + ", ";
  s += "\"path\": " + quoted(n.path);
  if (n.ref) return s + ", \"ref\": " + std::to_string(n.ref->value) + "}";
  std::string t_owners = "{";
  for (std::size_t a = 0; a < 2; ++a) {
    if (const auto o = n.transform_owners[a]) {
      if (t_owners.size() > 1) t_owners += ", ";
      t_owners += std::string("\"") + (a == 0 ? "x" : "y") +
                  "\": " + std::to_string(o->value);
    }
  }
  t_owners += "}";
  s += ", \"transformOwners\": " + t_owners;
  s += ", \"translate\": {\"x\": " + num(n.translate_x) +
       ", \"y\": " + num(n.translate_y) + "}";
  s += ", \"width\": " + num(n.width);
  s += ", \"x\": " + num(n.x) + ", \"y\": " + num(n.y) + "}";
  return s;
}

}  // namespace

double round_up_hundredths(double value) {
  return std::ceil(value * 100.0 - 1e-6) / 100.0;
}

ResolvedScene resolve_scene(const Scenegraph& graph) {
  ResolvedScene scene;
  const auto& nodes = graph.nodes();
  scene.nodes.resize(nodes.size());
  std::vector<std::array<double, 2>> offset(nodes.size(), {0.0, 0.0});
  const NodeId root = graph.root();
  for (const Node& node : nodes) {
    ResolvedNode& r = scene.nodes[node.id.value];
    r.id = node.id;
    r.kind = node.kind;
    r.name = node.name;
    r.path = node.path;
    r.children = node.children;
    r.paint_props = node.paint_props;
    if (node.is_ref) {
      r.ref = node.ref_target;
      continue;
    }
    r.local_x = node.bbox.axis(Axis::kHorizontal);
    r.local_y = node.bbox.axis(Axis::kVertical);
    if (!r.local_x.complete() || !r.local_y.complete()) {
      throw Error(Code::kUnsizedNode, "{0} has an incomplete box", {node.id});
    }
    if (node.id != root) {
      if (!node.transform.x || !node.transform.y) {
        throw Error(Code::kUndefinedTransform,
                    "{0} has an undefined translation", {node.id});
      }
      r.translate_x = *node.transform.x;
      r.translate_y = *node.transform.y;
      const auto& p = offset[node.parent->value];
      offset[node.id.value] = {p[0] + r.translate_x, p[1] + r.translate_y};
    }
    r.bbox_owners = node.bbox_owners;
    r.transform_owners = node.transform_owners;
    r.x = offset[node.id.value][0] + *r.local_x.start;
    r.y = offset[node.id.value][1] + *r.local_y.start;
    r.width = *r.local_x.size;
    r.height = *r.local_y.size;
  }
  const ResolvedNode& r = scene.nodes[root.value];
  scene.left = r.x;
  scene.top = r.y;
  scene.width = r.width;
  scene.height = r.height;
  return scene;
}

std::string paint(const ResolvedScene& scene, const Registry& registry) {
  SvgWriter out;
  const std::string w = num(round_up_hundredths(scene.width));
  const std::string h = num(round_up_hundredths(scene.height));
  out.open("svg", {{"height", h},
                   {"viewBox", "0 0 " + w + " " + h},
                   {"width", w},
                   {"xmlns", "http://www.w3.org/2000/svg"}});
  SvgWriter::Attrs attrs;
  if (num(scene.left) != "0" || num(scene.top) != "0") {
    attrs.emplace_back("transform", "translate(" + num(-scene.left) + " " +
                                        num(-scene.top) + ")");
  }
  out.open("g", std::move(attrs));
  if (!scene.nodes.empty()) {
    paint_node(scene, registry, scene.nodes.front(), out);
  }
  out.close("g");
  out.close("svg");
  return out.release();
}

std::string dump_scene(const ResolvedScene& scene) {
  std::map<std::string, std::string> geometry;
  std::map<std::string, int> name_count;
  for (const auto& n : scene.nodes) {
    if (n.name && !n.ref) ++name_count[*n.name];
  }
  for (const auto& n : scene.nodes) {
    if (!n.name || n.ref) continue;
    const std::string key =
        name_count[*n.name] > 1 ? *n.name + "@" + n.path : *n.name;
    geometry[key] = "{\"height\": " + num(n.height) + ", \"width\": " +
                    num(n.width) + ", \"x\": " + num(n.x) + ", \"y\": " +
                    num(n.y) + "}";
  }
  std::string s = "{\n  \"bluefishScene\": 1,\n  \"geometry\": {";
  bool first = true;
  for (const auto& [k, v] : geometry) {
    s += first ? "\n" : ",\n";
    s += "    " + quoted(k) + ": " + v;
    first = false;
  }
  s += geometry.empty() ? "},\n" : "\n  },\n";
  s += "  \"nodes\": [";
  first = true;
  for (const auto& n : scene.nodes) {
    s += first ? "\n" : ",\n";
    s += "    " + node_json(n);
    first = false;
  }
  s += scene.nodes.empty() ? "],\n" : "\n  ],\n";
  s += "  \"size\": {\"height\": " + num(round_up_hundredths(scene.height)) +
       ", \"width\": " + num(round_up_hundredths(scene.width)) + "}\n}\n";
  return s;
}

}  // namespace bluefish
