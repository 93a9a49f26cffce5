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

#ifndef BLUEFISH_RENDERER_HPP_
#define BLUEFISH_RENDERER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "geometry.hpp"
#include "registry.hpp"
#include "scenegraph.hpp"

namespace bluefish {

struct ResolvedNode {
  NodeId id;
  std::string kind;
  std::optional<std::string> name;
  std::string path;
  std::optional<NodeId> ref;
  std::vector<NodeId> children;

  // Root-frame box. Zero for refs.
  double x = 0;
  double y = 0;
  double width = 0;
  double height = 0;

  // Local box and translation into the parent frame.
  AxisValues local_x;
  AxisValues local_y;
  double translate_x = 0;
  double translate_y = 0;

  BBoxOwners bbox_owners;
  std::array<std::optional<NodeId>, 2> transform_owners{};
  Json paint_props;
};

struct ResolvedScene {
  std::vector<ResolvedNode> nodes;  // indexed by id, pre-order
  double left = 0;                  // root box in the root frame
  double top = 0;
  double width = 0;
  double height = 0;
};

// Requires a finalized graph.
ResolvedScene resolve_scene(const Scenegraph& graph);

std::string paint(const ResolvedScene& scene, const Registry& registry);

std::string dump_scene(const ResolvedScene& scene);

// Viewport size: rounded up to two fractional digits.
double round_up_hundredths(double value);

}  // namespace bluefish

#endif  // BLUEFISH_RENDERER_HPP_
