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

#include "scenegraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bluefish {
namespace {

std::size_t axis_index(Axis axis) { return axis == Axis::kHorizontal ? 0 : 1; }

}  // namespace

void Scenegraph::check(NodeId id) const {
  if (!contains(id)) {
    throw Error(Code::kUnknownParent,
                "no node with id " + std::to_string(id.value));
  }
}

NodeId Scenegraph::create_node(std::string kind, std::optional<NodeId> parent,
                               Json paint_props) {
  Node n;
  n.id = NodeId{static_cast<std::uint32_t>(nodes_.size())};
  n.kind = std::move(kind);
  n.paint_props = std::move(paint_props);
  if (parent) {
    check(*parent);
    if (node(*parent).is_ref) {
      throw Error(Code::kUnknownParent, "ref {0} cannot have children",
                  {*parent});
    }
    n.parent = parent;
    n.depth = node(*parent).depth + 1;
  } else if (root_) {
    throw Error(Code::kUnknownParent,
                "scenegraph already has a root ({0}); a parent is required",
                {*root_});
  }
  const NodeId id = n.id;
  nodes_.push_back(std::move(n));
  if (parent) {
    node(*parent).children.push_back(id);
  } else {
    root_ = id;
  }
  return id;
}

NodeId Scenegraph::create_ref(NodeId parent, NodeId referent) {
  check(parent);
  check(referent);
  if (node(parent).is_ref) {
    throw Error(Code::kUnknownParent, "ref {0} cannot have children",
                {parent});
  }
  if (node(referent).is_ref) {
    throw Error(Code::kRefToRef, "{0} selects another ref ({1})",
                {parent, referent});
  }
  if (is_ancestor(referent, parent)) {
    throw Error(Code::kSelfReference,
                "a ref under {0} selects its own ancestor {1}",
                {parent, referent});
  }
  Node n;
  n.id = NodeId{static_cast<std::uint32_t>(nodes_.size())};
  n.kind = "ref";
  n.is_ref = true;
  n.ref_target = referent;
  n.parent = parent;
  n.depth = node(parent).depth + 1;
  const NodeId id = n.id;
  nodes_.push_back(std::move(n));
  node(parent).children.push_back(id);
  return id;
}

const Node& Scenegraph::node(NodeId id) const { return nodes_.at(id.value); }
Node& Scenegraph::node(NodeId id) { return nodes_.at(id.value); }

NodeId Scenegraph::root() const {
  if (!root_) throw Error(Code::kInternal, "scenegraph has no root");
  return *root_;
}

bool Scenegraph::is_ancestor(NodeId ancestor, NodeId id) const {
  const auto target_depth = node(ancestor).depth;
  std::optional<NodeId> cur = id;
  while (cur && node(*cur).depth > target_depth) cur = node(*cur).parent;
  return cur && *cur == ancestor;
}

NodeId Scenegraph::lca(NodeId a, NodeId b) const {
  check(a);
  check(b);
  while (node(a).depth > node(b).depth) a = *node(a).parent;
  while (node(b).depth > node(a).depth) b = *node(b).parent;
  while (a != b) {
    const auto pa = node(a).parent;
    const auto pb = node(b).parent;
    if (!pa || !pb) {
      throw Error(Code::kInternal, "{0} and {1} are disconnected", {a, b});
    }
    a = *pa;
    b = *pb;
  }
  return a;
}

NodeId Scenegraph::resolve(NodeId id) const {
  const Node& n = node(id);
  return n.is_ref ? n.ref_target : id;
}

bool Scenegraph::is_placed(NodeId id, Axis axis) const {
  return node(resolve(id)).transform[axis].has_value();
}

double Scenegraph::materialize_chain(NodeId from, NodeId stop, Axis axis,
                                     NodeId requester) {
  double sum = 0;
  NodeId cur = from;
  while (cur != stop) {
    Node& n = node(cur);
    auto& t = n.transform[axis];
    if (!t) {
      t = 0.0;
      n.transform_owners[axis_index(axis)] = requester;
    }
    sum += *t;
    if (!n.parent) {
      throw Error(Code::kInternal, "{0} is not below {1}", {from, stop});
    }
    cur = *n.parent;
  }
  return sum;
}

double Scenegraph::offset_to(NodeId from, std::optional<NodeId> stop,
                             Axis axis) const {
  double sum = 0;
  std::optional<NodeId> cur = from;
  while (cur && cur != stop) {
    const Node& n = node(*cur);
    const auto& t = n.transform[axis];
    if (!t) {
      throw Error(Code::kUndefinedTransform,
                  "translation " + std::string(axis_name(axis)) +
                      " of {0} is undefined",
                  {*cur});
    }
    sum += *t;
    cur = n.parent;
  }
  return sum;
}

AxisValues Scenegraph::ensure_axis(NodeId id, Axis axis, NodeId requester) {
  id = resolve(id);
  {
    const AxisValues local = node(id).bbox.axis(axis);
    if (local.complete()) return local;
  }
  // Copy: reading children may grow nothing, but keep the list stable.
  const std::vector<NodeId> children = node(id).children;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (NodeId child : children) {
    const AxisValues box = bbox_in_frame(resolve(child), id, axis, requester);
    lo = std::min(lo, *box.start);
    hi = std::max(hi, *box.end);
  }
  if (children.empty()) {
    throw Error(Code::kUnsizedNode,
                "{0} has no " +
                    std::string(dim_name(dim_of(axis, Slot::kExtent))) +
                    " and no children to derive it from",
                {id});
  }
  set_own(id, dim_of(axis, Slot::kStart), lo, id);
  set_own(id, dim_of(axis, Slot::kExtent), hi - lo, id);
  return node(id).bbox.axis(axis);
}

double Scenegraph::extent(NodeId target, Axis axis, NodeId requester) {
  return *ensure_axis(target, axis, requester).size;
}

AxisValues Scenegraph::bbox_in_frame(NodeId target, NodeId frame, Axis axis,
                                     NodeId requester) {
  target = resolve(target);
  const AxisValues local = ensure_axis(target, axis, requester);
  if (target == frame) return local;
  const NodeId common = lca(target, frame);
  const double offset = materialize_chain(target, common, axis, requester) -
                        materialize_chain(frame, common, axis, requester);
  AxisValues out = local;
  *out.start += offset;
  *out.center += offset;
  *out.end += offset;
  return out;
}

void Scenegraph::set_own(NodeId id, Dim dim, double value, NodeId writer) {
  Node& n = node(id);
  bbox_set(n.bbox, n.bbox_owners, dim, value, writer);
}

void Scenegraph::set_translate(NodeId id, Axis axis, double value,
                               NodeId writer) {
  Node& n = node(id);
  auto& t = n.transform[axis];
  auto& owner = n.transform_owners[axis_index(axis)];
  if (t) {
    if (owner == writer && std::abs(*t - value) <= kTolerance) return;
    const std::string a(axis_name(axis));
    throw Error(Code::kDimensionConflict,
                "position " + a + " of {0} is owned by {1}; {2} tried to move "
                "it by " + std::to_string(value - *t),
                {id, owner.value_or(id), writer});
  }
  if (!std::isfinite(value)) {
    throw Error(Code::kInvalidExtent, "non-finite translation for {0}", {id});
  }
  t = value;
  owner = writer;
}

void Scenegraph::set_dim_in_frame(NodeId target, NodeId frame, Dim dim,
                                  double value, NodeId writer) {
  target = resolve(target);
  if (is_extent(dim)) {
    set_own(target, dim, value, writer);
    return;
  }
  if (is_ancestor(target, frame)) {
    throw Error(Code::kSelfReference,
                "{0} cannot position {1} in the frame of its descendant {2}",
                {writer, target, frame});
  }
  const Axis axis = axis_of(dim);
  const NodeId common = lca(target, frame);
  const double frame_offset =
      materialize_chain(frame, common, axis, writer);
  const double parent_offset =
      materialize_chain(*node(target).parent, common, axis, writer);
  const AxisValues local = node(target).bbox.axis(axis);
  AxisValues resolved = local;
  if (!local.complete()) resolved = ensure_axis(target, axis, writer);
  const auto local_value = resolved.get(slot_of(dim));
  if (!local_value) {
    throw Error(Code::kUndefinedExtent,
                "cannot place " + std::string(dim_name(dim)) +
                    " of {0}: its extent is unknown",
                {target});
  }
  set_translate(target, axis, value + frame_offset - parent_offset -
                                  *local_value,
                writer);
}

void Scenegraph::finalize() {
  if (!root_) throw Error(Code::kInternal, "scenegraph has no root");
  const NodeId root_id = *root_;
  for (Node& n : nodes_) {
    if (n.is_ref) continue;
    for (Axis axis : kAxes) {
      if (!n.transform[axis]) {
        n.transform[axis] = 0.0;
        n.transform_owners[axis_index(axis)] = root_id;
      }
    }
  }
  // Children have larger ids than their parents, so a reverse sweep is a
  // valid post-order for box completion.
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    if (nodes_[i].is_ref) continue;
    const NodeId id{static_cast<std::uint32_t>(i)};
    for (Axis axis : kAxes) ensure_axis(id, axis, root_id);
  }
}

}  // namespace bluefish
