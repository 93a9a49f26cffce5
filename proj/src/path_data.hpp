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

#ifndef BLUEFISH_PATH_DATA_HPP_
#define BLUEFISH_PATH_DATA_HPP_

#include <optional>
#include <string_view>

namespace bluefish {

struct PathBounds {
  double min_x = 0;
  double min_y = 0;
  double max_x = 0;
  double max_y = 0;
};

// Bounds of the control polygon of SVG path data: every endpoint and every
// Bezier control point (including reflected ones). Arcs contribute their
// endpoints only. Returns nullopt for empty data; throws
// Error(kSchemaError) on malformed data.
std::optional<PathBounds> path_control_bounds(std::string_view d);

}  // namespace bluefish

#endif  // BLUEFISH_PATH_DATA_HPP_
