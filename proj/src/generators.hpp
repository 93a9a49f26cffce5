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

#ifndef BLUEFISH_GENERATORS_HPP_
#define BLUEFISH_GENERATORS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bluefish {

// Names accepted by generate_document.
const std::vector<std::string>& generator_names();

// Document whose scenegraph has about `nodes` nodes. Returns nullopt for an
// unknown generator or a zero size.
std::optional<std::string> generate_document(std::string_view generator,
                                             std::size_t nodes);

// Heap-shaped tree of exactly `nodes` nodes with branching factor 8:
// internal nodes alternate stackV/stackH by depth, leaves are rects.
std::string nested_stacks(std::size_t nodes);

// n rows of n cells stacked vertically, plus n-1 arrows between rows that
// reach their endpoints through path selectors.
std::string insertion_sort_like(std::size_t n);
std::size_t insertion_sort_like_node_count(std::size_t n);
// Row count whose node count is closest to `nodes`.
std::size_t insertion_sort_like_rows(std::size_t nodes);

}  // namespace bluefish

#endif  // BLUEFISH_GENERATORS_HPP_
