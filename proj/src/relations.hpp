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

#ifndef BLUEFISH_RELATIONS_HPP_
#define BLUEFISH_RELATIONS_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"
#include "geometry.hpp"
#include "registry.hpp"
#include "scenegraph.hpp"
#include "svg.hpp"

namespace bluefish {

// Services the engine offers to a running layout function.
class LayoutDriver {
 public:
  virtual ~LayoutDriver() = default;
  virtual void layout_node(NodeId id) = 0;
  virtual void warn(Code code, std::string message,
                    std::vector<NodeId> nodes) = 0;
};

// The only handle a layout function gets. Every write goes through the
// scenegraph's ownership checks with the running node as writer; every read
// is expressed in the running node's frame.
class LayoutContext {
 public:
  LayoutContext(Scenegraph& graph, NodeId self, LayoutDriver& driver)
      : graph_(graph), self_(self), driver_(driver) {}

  NodeId self() const { return self_; }
  const Json& props() const { return graph_.node(self_).paint_props; }
  Json& paint_props() { return graph_.node(self_).paint_props; }
  const std::vector<NodeId>& children() const {
    return graph_.node(self_).children;
  }
  Scenegraph& graph() { return graph_; }

  // Runs the layout of every non-ref child, in order.
  void layout_children();

  bool is_placed(NodeId child, Axis axis) const {
    return graph_.is_placed(child, axis);
  }
  double extent(NodeId child, Axis axis) {
    return graph_.extent(child, axis, self_);
  }
  AxisValues box(NodeId child, Axis axis) {
    return graph_.bbox_in_frame(child, self_, axis, self_);
  }
  void place(NodeId child, Dim dim, double value) {
    graph_.set_dim_in_frame(child, self_, dim, value, self_);
  }
  void set_own(Dim dim, double value) {
    graph_.set_own(self_, dim, value, self_);
  }
  // Owner of the child's translation on `axis` (the referent's for refs).
  std::optional<NodeId> placer(NodeId child, Axis axis) const {
    return graph_.node(graph_.resolve(child)).transform_owner(axis);
  }

  void warn(Code code, std::string message, std::vector<NodeId> nodes) {
    driver_.warn(code, std::move(message), std::move(nodes));
  }

  double number(std::string_view key) const;
  std::string string(std::string_view key) const;

 private:
  Scenegraph& graph_;
  NodeId self_;
  LayoutDriver& driver_;
};

// What a paint function sees: the node's props and its local box.
struct PaintInput {
  NodeId id;
  const Json& props;
  AxisValues x;
  AxisValues y;
};

struct TextExtent {
  double width = 0;
  double height = 0;
};

// Deterministic text model: 0.6 em per Unicode scalar value, 1.2 em line
// height. The family is accepted for interface stability but ignored.
TextExtent measure_text(std::string_view content, double font_size,
                        std::string_view font_family = "sans-serif");

std::size_t count_scalar_values(std::string_view utf8);

// One (axis, slot) pair per axis an alignment name touches, horizontal
// first. Throws kBadEnumValue for unknown names.
std::vector<std::pair<Axis, Slot>> alignment_targets(std::string_view name);

// Shared relation building blocks. `children` may mix layout and ref nodes.

// Puts the given slot of every child on one guideline. The guideline is 0
// unless some child is already placed on the axis; then the first placed
// child fixes it and every other placed child must agree.
void align_axis(LayoutContext& ctx, std::span<const NodeId> children,
                Axis axis, Slot slot);

// Cursor walk along `axis`, `spacing` apart. Placed children anchor the walk
// (the first one fixes the cursor; earlier children are filled backwards);
// otherwise the first child starts at 0.
void distribute_axis(LayoutContext& ctx, std::span<const NodeId> children,
                     Axis axis, double spacing);

// Sets the node's own box on `axis` to the union of its children's boxes.
void fit_to_children(LayoutContext& ctx, Axis axis);

// Registers marks, relations and the group into `registry`.
void register_standard_kinds(Registry& registry);

}  // namespace bluefish

#endif  // BLUEFISH_RELATIONS_HPP_
