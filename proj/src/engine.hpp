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

#ifndef BLUEFISH_ENGINE_HPP_
#define BLUEFISH_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "document.hpp"
#include "registry.hpp"
#include "renderer.hpp"
#include "scenegraph.hpp"

namespace bluefish {

inline constexpr int kMaxExpansionDepth = 64;

// Replaces every composite element by its expansion until only primitive
// kinds remain. A named composite passes its name to the expansion root.
// Throws Error(kSchemaError) when expansions nest deeper than
// kMaxExpansionDepth.
ElementTree expand_composites(const ElementTree& tree,
                              const Registry& registry);

// Expansion driven by a JSON element template. A string "$p" anywhere in the
// template becomes the composite's prop p (dropped from props objects when
// unset); an element {"kind": "$children"} splices in the composite's
// children.
ExpandFn template_expansion(Json element_template);

// One node per element, ids equal to pre-order element indices.
Scenegraph build_scenegraph(const ElementTree& tree, const NameTable& names,
                            const Registry& registry);

struct LayoutOutcome {
  std::vector<Diagnostic> diagnostics;
  // Layout invocations per node id; refs stay 0.
  std::vector<std::uint32_t> invocations;

  bool ok() const;
};

// Single pre-order pass followed by finalize. Stops at the first error.
LayoutOutcome layout_document(Scenegraph& graph, const Registry& registry);

// Diagnostic for a core error, naming nodes by their element paths.
Diagnostic to_diagnostic(const Error& error, const Scenegraph* graph);

struct CompileOptions {
  bool svg = true;
  bool dump = false;
};

struct CompileResult {
  std::vector<Diagnostic> diagnostics;
  std::optional<Scenegraph> graph;
  std::optional<ResolvedScene> scene;
  std::optional<std::string> svg;
  std::optional<std::string> dump;
  std::vector<std::uint32_t> invocations;

  bool ok() const;
  std::size_t node_count() const { return graph ? graph->size() : 0; }
};

class Engine {
 public:
  Engine() : registry_(Registry::standard()) {}

  Registry& registry() { return registry_; }
  const Registry& registry() const { return registry_; }

  CompileResult compile(std::string_view document,
                        const CompileOptions& options = {}) const;

 private:
  Registry registry_;
};

}  // namespace bluefish

#endif  // BLUEFISH_ENGINE_HPP_
