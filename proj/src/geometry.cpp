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

#include "geometry.hpp"

#include <cmath>
#include <string>

namespace bluefish {
namespace {

constexpr std::array<std::string_view, 8> kDimNames = {
    "left", "centerX", "right", "width", "top", "centerY", "bottom", "height",
};

bool near(double a, double b) { return std::abs(a - b) <= kTolerance; }

std::string fmt(double v) {
  std::string s = std::to_string(v);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string_view dim_name(Dim dim) {
  return kDimNames[static_cast<std::size_t>(dim)];
}

std::optional<Dim> parse_dim(std::string_view name) {
  for (Dim dim : kAllDims) {
    if (dim_name(dim) == name) return dim;
  }
  return std::nullopt;
}

std::string_view axis_name(Axis axis) {
  return axis == Axis::kHorizontal ? "x" : "y";
}

std::optional<double> AxisValues::get(Slot slot) const {
  switch (slot) {
    case Slot::kStart: return start;
    case Slot::kCenter: return center;
    case Slot::kEnd: return end;
    case Slot::kExtent: return size;
  }
  return std::nullopt;
}

AxisValues PartialBBox::axis(Axis axis) const {
  const auto s = stored(dim_of(axis, Slot::kStart));
  const auto c = stored(dim_of(axis, Slot::kCenter));
  const auto e = stored(dim_of(axis, Slot::kEnd));
  const auto w = stored(dim_of(axis, Slot::kExtent));

  std::optional<double> start;
  std::optional<double> size;
  if (w) {
    size = w;
    if (s) {
      start = s;
    } else if (c) {
      start = *c - *w / 2;
    } else if (e) {
      start = *e - *w;
    }
  } else if (s && e) {
    start = s;
    size = *e - *s;
  } else if (s && c) {
    start = s;
    size = 2 * (*c - *s);
  } else if (c && e) {
    size = 2 * (*e - *c);
    start = *e - *size;
  }

  AxisValues out;
  if (start && size) {
    out.start = start;
    out.size = size;
    out.center = *start + *size / 2;
    out.end = *start + *size;
  } else {
    out.start = s;
    out.center = c;
    out.end = e;
    out.size = w;
    return out;
  }

  const auto check = [&](const std::optional<double>& have, double want,
                         Slot slot) {
    if (have && !near(*have, want)) {
      throw Error(Code::kInconsistentBBox,
                  "stored " + std::string(dim_name(dim_of(axis, slot))) +
                      "=" + fmt(*have) + " contradicts derived value " +
                      fmt(want));
    }
  };
  check(s, *out.start, Slot::kStart);
  check(c, *out.center, Slot::kCenter);
  check(e, *out.end, Slot::kEnd);
  check(w, *out.size, Slot::kExtent);
  if (*out.size < -kTolerance) {
    throw Error(Code::kInconsistentBBox,
                "derived " +
                    std::string(dim_name(dim_of(axis, Slot::kExtent))) +
                    " is negative (" + fmt(*out.size) + ")");
  }
  return out;
}

std::optional<double> bbox_get(const PartialBBox& bbox, Dim dim) {
  return bbox.axis(axis_of(dim)).get(slot_of(dim));
}

void bbox_set(PartialBBox& bbox, BBoxOwners& owners, Dim dim, double value,
              NodeId writer) {
  const std::string field(dim_name(dim));
  if (!std::isfinite(value)) {
    throw Error(Code::kInvalidExtent,
                "non-finite value for " + field + " written by {0}", {writer});
  }
  if (is_extent(dim) && value < 0) {
    throw Error(Code::kInvalidExtent,
                "negative " + field + " (" + fmt(value) + ") written by {0}",
                {writer});
  }
  const auto index = static_cast<std::size_t>(dim);
  if (const auto owner = owners.owner[index]) {
    const double existing = *bbox.stored(dim);
    if (*owner == writer && near(existing, value)) return;
    throw Error(Code::kDimensionConflict,
                field + " of the box is owned by {0} (value " +
                    fmt(existing) + "); {1} tried to write " + fmt(value),
                {*owner, writer});
  }
  // An unowned field may still be implied by the stored ones.
  if (const auto implied = bbox_get(bbox, dim); implied &&
                                                !near(*implied, value)) {
    NodeId blocker = writer;
    const Axis axis = axis_of(dim);
    for (Slot slot : {Slot::kStart, Slot::kCenter, Slot::kEnd, Slot::kExtent}) {
      if (const auto o = owners[dim_of(axis, slot)]) {
        blocker = *o;
        break;
      }
    }
    throw Error(Code::kDimensionConflict,
                field + " is already implied as " + fmt(*implied) +
                    " by fields owned by {0}; {1} tried to write " +
                    fmt(value),
                {blocker, writer});
  }
  bbox.store(dim, value);
  owners.owner[index] = writer;
}

Translate compose_translations(std::span<const Translate> chain) {
  Translate out{0.0, 0.0};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!chain[i].x || !chain[i].y) {
      throw Error(Code::kUndefinedTransform,
                  "translation " + std::to_string(i) +
                      " in the chain has an undefined component");
    }
    *out.x += *chain[i].x;
    *out.y += *chain[i].y;
  }
  return out;
}

}  // namespace bluefish
