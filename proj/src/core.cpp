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

#include "core.hpp"

#include <array>

namespace bluefish {
namespace {

struct CodeInfo {
  Code code;
  std::string_view id;
  std::string_view name;
};

constexpr std::array kCodes = {
    CodeInfo{Code::kDimensionConflict, "BF001", "DimensionConflict"},
    CodeInfo{Code::kUnresolvedName, "BF002", "UnresolvedName"},
    CodeInfo{Code::kForwardReference, "BF003", "ForwardReference"},
    CodeInfo{Code::kUnsizedNode, "BF004", "UnsizedNode"},
    CodeInfo{Code::kAmbiguousName, "BF005", "AmbiguousName"},
    CodeInfo{Code::kSyntaxError, "BF006", "SyntaxError"},
    CodeInfo{Code::kSchemaError, "BF007", "SchemaError"},
    CodeInfo{Code::kDegenerateConnector, "BF008", "DegenerateConnector"},
    CodeInfo{Code::kUnknownKind, "BF009", "UnknownKind"},
    CodeInfo{Code::kMissingProp, "BF010", "MissingProp"},
    CodeInfo{Code::kBadEnumValue, "BF011", "BadEnumValue"},
    CodeInfo{Code::kRefWithChildren, "BF012", "RefWithChildren"},
    CodeInfo{Code::kDuplicateNameInScope, "BF013", "DuplicateNameInScope"},
    CodeInfo{Code::kSelfReference, "BF014", "SelfReference"},
    CodeInfo{Code::kUndefinedExtent, "BF015", "UndefinedExtent"},
    CodeInfo{Code::kInconsistentBBox, "BF016", "InconsistentBBox"},
    CodeInfo{Code::kInvalidExtent, "BF017", "InvalidExtent"},
    CodeInfo{Code::kRefToRef, "BF018", "RefToRef"},
    CodeInfo{Code::kDuplicateKind, "BF019", "DuplicateKind"},
    CodeInfo{Code::kUndefinedTransform, "BF020", "UndefinedTransform"},
    CodeInfo{Code::kUnknownParent, "BF021", "UnknownParent"},
    CodeInfo{Code::kInternal, "BF099", "Internal"},
};

const CodeInfo& info(Code code) {
  for (const auto& entry : kCodes) {
    if (entry.code == code) return entry;
  }
  return kCodes.back();
}

std::string substitute(const std::string& raw, const std::vector<NodeId>& nodes,
                       const std::function<std::string(NodeId)>& name_of) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '{') {
      std::size_t close = raw.find('}', i);
      if (close != std::string::npos && close > i + 1) {
        std::string_view digits(raw.data() + i + 1, close - i - 1);
        bool numeric = true;
        std::size_t index = 0;
        for (char c : digits) {
          if (c < '0' || c > '9') {
            numeric = false;
            break;
          }
          index = index * 10 + static_cast<std::size_t>(c - '0');
        }
        if (numeric && index < nodes.size()) {
          out += name_of(nodes[index]);
          i = close;
          continue;
        }
      }
    }
    out += raw[i];
  }
  return out;
}

std::string hash_name(NodeId id) { return "#" + std::to_string(id.value); }

}  // namespace

std::string_view code_string(Code code) { return info(code).id; }
std::string_view code_name(Code code) { return info(code).name; }

Error::Error(Code code, std::string message, std::vector<NodeId> nodes,
             std::vector<std::string> paths)
    : std::runtime_error(substitute(message, nodes, hash_name)),
      code_(code),
      raw_(std::move(message)),
      nodes_(std::move(nodes)),
      paths_(std::move(paths)) {}

std::string Error::format(
    const std::function<std::string(NodeId)>& name_of) const {
  return substitute(raw_, nodes_, name_of);
}

}  // namespace bluefish
