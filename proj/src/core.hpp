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

#ifndef BLUEFISH_CORE_HPP_
#define BLUEFISH_CORE_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bluefish {

// Index of a node in a Scenegraph. Engine-built graphs use the pre-order
// index of the originating document element.
struct NodeId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

// Stable diagnostic codes. The numeric part is part of the CLI contract.
enum class Code : std::uint8_t {
  kDimensionConflict,    // BF001
  kUnresolvedName,       // BF002
  kForwardReference,     // BF003
  kUnsizedNode,          // BF004
  kAmbiguousName,        // BF005
  kSyntaxError,          // BF006
  kSchemaError,          // BF007
  kDegenerateConnector,  // BF008
  kUnknownKind,          // BF009
  kMissingProp,          // BF010
  kBadEnumValue,         // BF011
  kRefWithChildren,      // BF012
  kDuplicateNameInScope, // BF013
  kSelfReference,        // BF014
  kUndefinedExtent,      // BF015
  kInconsistentBBox,     // BF016
  kInvalidExtent,        // BF017
  kRefToRef,             // BF018
  kDuplicateKind,        // BF019
  kUndefinedTransform,   // BF020
  kUnknownParent,        // BF021
  kInternal,             // BF099
};

enum class Severity : std::uint8_t { kError, kWarning };

// "BF001" etc.
std::string_view code_string(Code code);
// "DimensionConflict" etc.
std::string_view code_name(Code code);

struct Diagnostic {
  Code code = Code::kInternal;
  Severity severity = Severity::kError;
  std::string message;
  // Slash-joined element paths, e.g. "group/stackV[2]/ref[1]".
  std::vector<std::string> paths;

  bool is_error() const { return severity == Severity::kError; }
};

// Exception type used throughout the core. Messages may mention involved
// nodes with "{0}", "{1}", ... placeholders that index into nodes(); the
// engine substitutes element paths, what() substitutes "#<id>".
class Error : public std::runtime_error {
 public:
  Error(Code code, std::string message, std::vector<NodeId> nodes = {},
        std::vector<std::string> paths = {});

  Code code() const { return code_; }
  const std::string& raw_message() const { return raw_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<std::string>& paths() const { return paths_; }

  // Renders the message, naming each node with `name_of`.
  std::string format(const std::function<std::string(NodeId)>& name_of) const;

 private:
  Code code_;
  std::string raw_;
  std::vector<NodeId> nodes_;
  std::vector<std::string> paths_;
};

}  // namespace bluefish

template <>
struct std::hash<bluefish::NodeId> {
  std::size_t operator()(bluefish::NodeId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

#endif  // BLUEFISH_CORE_HPP_
