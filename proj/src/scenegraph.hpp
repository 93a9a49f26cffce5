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

#ifndef BLUEFISH_SCENEGRAPH_HPP_
#define BLUEFISH_SCENEGRAPH_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "geometry.hpp"
#include "json.hpp"

namespace bluefish {

using Json = nlohmann::json;

// A node of the compound scenegraph. Layout nodes carry geometry; ref nodes
// are leaves whose adjacency edge points at a layout node elsewhere.
struct Node {
  NodeId id;
  std::string kind;
  bool is_ref = false;
  NodeId ref_target;  // valid when is_ref
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
  std::uint32_t depth = 0;

  PartialBBox bbox;  // local frame
  BBoxOwners bbox_owners;
  Translate transform;  // local -> parent
  std::array<std::optional<NodeId>, 2> transform_owners{};

  Json paint_props = Json::object();

  // Metadata for diagnostics and dumps.
  std::optional<std::string> name;
  std::string path;

  std::optional<NodeId> transform_owner(Axis axis) const {
    return transform_owners[axis == Axis::kHorizontal ? 0 : 1];
  }
};

class Scenegraph {
 public:
  // Creates a layout node. The first parentless node becomes the root; a
  // second one, or an unknown/ref parent, throws kUnknownParent.
  NodeId create_node(std::string kind, std::optional<NodeId> parent,
                     Json paint_props = Json::object());

  // Creates a ref leaf under `parent` pointing at `referent`. Throws
  // kRefToRef when the referent is itself a ref and kSelfReference when it
  // is `parent` or one of its ancestors.
  NodeId create_ref(NodeId parent, NodeId referent);

  bool contains(NodeId id) const { return id.value < nodes_.size(); }
  const Node& node(NodeId id) const;
  Node& node(NodeId id);
  NodeId root() const;
  bool has_root() const { return root_.has_value(); }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }

  bool is_ancestor(NodeId ancestor, NodeId node) const;  // inclusive
  NodeId lca(NodeId a, NodeId b) const;

  // The referent of a ref, the node itself otherwise.
  NodeId resolve(NodeId id) const;

  // True once the node's translation on `axis` is defined.
  bool is_placed(NodeId id, Axis axis) const;

  // Extent of the node on `axis`; frame independent. May compute the box of
  // a relation whose layout left that axis open (see ensure_axis).
  double extent(NodeId target, Axis axis, NodeId requester);

  // Values of the target's box on `axis` in the coordinates of `frame`.
  // Undefined translations on the path target -> lca and frame -> lca
  // (the lca itself excluded) are materialized to 0 with owner `requester`.
  AxisValues bbox_in_frame(NodeId target, NodeId frame, Axis axis,
                           NodeId requester);

  // Writes one dimension of `target` expressed in `frame` coordinates.
  // Positions are realized through the target's translation; extents go to
  // the target's own box.
  void set_dim_in_frame(NodeId target, NodeId frame, Dim dim, double value,
                        NodeId writer);

  // Ownership-checked write of a node's own box field.
  void set_own(NodeId id, Dim dim, double value, NodeId writer);

  // Ownership-checked write of a node's translation.
  void set_translate(NodeId id, Axis axis, double value, NodeId writer);

  // Makes the node's local box complete on `axis`. When no position is
  // stored, the box becomes the union of the children's boxes (materializing
  // their translations with owner `requester`). Throws kUnsizedNode when
  // there is nothing to measure.
  AxisValues ensure_axis(NodeId id, Axis axis, NodeId requester);

  // Defaults every undefined translation to 0 (owner: root) and completes
  // every layout node's box. Throws kUnsizedNode for nodes without extent.
  void finalize();

  // Sum of translations from `from` up to, excluding, `stop` (an ancestor),
  // without materializing. Requires the path to be defined.
  double offset_to(NodeId from, std::optional<NodeId> stop, Axis axis) const;

 private:
  double materialize_chain(NodeId from, NodeId stop, Axis axis,
                           NodeId requester);
  void check(NodeId id) const;

  std::vector<Node> nodes_;
  std::optional<NodeId> root_;
};

}  // namespace bluefish

#endif  // BLUEFISH_SCENEGRAPH_HPP_
