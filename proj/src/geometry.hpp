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

#ifndef BLUEFISH_GEOMETRY_HPP_
#define BLUEFISH_GEOMETRY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "core.hpp"

namespace bluefish {

// Absolute tolerance for every geometric equality check.
inline constexpr double kTolerance = 1e-6;

enum class Axis : std::uint8_t { kHorizontal, kVertical };

inline constexpr std::array<Axis, 2> kAxes = {Axis::kHorizontal,
                                              Axis::kVertical};

constexpr Axis other(Axis axis) {
  return axis == Axis::kHorizontal ? Axis::kVertical : Axis::kHorizontal;
}

// The eight bounding-box dimensions. Each axis owns three position fields
// (start, center, end) and one extent field.
enum class Dim : std::uint8_t {
  kLeft,
  kCenterX,
  kRight,
  kWidth,
  kTop,
  kCenterY,
  kBottom,
  kHeight,
};

inline constexpr std::array<Dim, 8> kAllDims = {
    Dim::kLeft,   Dim::kCenterX, Dim::kRight,  Dim::kWidth,
    Dim::kTop,    Dim::kCenterY, Dim::kBottom, Dim::kHeight,
};

// Role of a dimension within its axis.
enum class Slot : std::uint8_t { kStart, kCenter, kEnd, kExtent };

constexpr Axis axis_of(Dim dim) {
  return static_cast<std::uint8_t>(dim) < 4 ? Axis::kHorizontal
                                            : Axis::kVertical;
}
constexpr Slot slot_of(Dim dim) {
  return static_cast<Slot>(static_cast<std::uint8_t>(dim) % 4);
}
constexpr Dim dim_of(Axis axis, Slot slot) {
  return static_cast<Dim>((axis == Axis::kHorizontal ? 0 : 4) +
                          static_cast<std::uint8_t>(slot));
}
constexpr bool is_extent(Dim dim) { return slot_of(dim) == Slot::kExtent; }

std::string_view dim_name(Dim dim);
std::optional<Dim> parse_dim(std::string_view name);
std::string_view axis_name(Axis axis);  // "x" / "y"

// Resolved values of one axis: the three positions plus the extent.
struct AxisValues {
  std::optional<double> start;
  std::optional<double> center;
  std::optional<double> end;
  std::optional<double> size;

  std::optional<double> get(Slot slot) const;
  bool complete() const { return start && size; }
};

// Bounding box with every dimension optional. Only stored fields are kept;
// the remaining ones are derived on read.
class PartialBBox {
 public:
  std::optional<double> stored(Dim dim) const {
    return fields_[static_cast<std::size_t>(dim)];
  }
  // Raw store without ownership or consistency checks.
  void store(Dim dim, double value) {
    fields_[static_cast<std::size_t>(dim)] = value;
  }

  // Stored or derived values of one axis. Throws kInconsistentBBox when the
  // stored fields of the axis disagree.
  AxisValues axis(Axis axis) const;

  friend bool operator==(const PartialBBox&, const PartialBBox&) = default;

 private:
  std::array<std::optional<double>, 8> fields_{};
};

// Owner of each explicitly written field.
struct BBoxOwners {
  std::array<std::optional<NodeId>, 8> owner{};

  std::optional<NodeId> operator[](Dim dim) const {
    return owner[static_cast<std::size_t>(dim)];
  }

  friend bool operator==(const BBoxOwners&, const BBoxOwners&) = default;
};

// Stored value if present, otherwise derived from the other fields of the
// same axis; nullopt when the axis is underdetermined.
std::optional<double> bbox_get(const PartialBBox& bbox, Dim dim);

// Ownership-checked write. Throws kDimensionConflict when another node owns
// the field, when the owner re-writes a different value, or when the value
// contradicts what the stored fields already imply. Throws kInvalidExtent
// for negative extents.
void bbox_set(PartialBBox& bbox, BBoxOwners& owners, Dim dim, double value,
              NodeId writer);

// Translation from a node's local frame into its parent's frame.
struct Translate {
  std::optional<double> x;
  std::optional<double> y;

  std::optional<double>& operator[](Axis axis) {
    return axis == Axis::kHorizontal ? x : y;
  }
  const std::optional<double>& operator[](Axis axis) const {
    return axis == Axis::kHorizontal ? x : y;
  }

  friend bool operator==(const Translate&, const Translate&) = default;
};

// Component-wise sum; the empty chain is the identity (0, 0). Throws
// kUndefinedTransform if any component is absent.
Translate compose_translations(std::span<const Translate> chain);

}  // namespace bluefish

#endif  // BLUEFISH_GEOMETRY_HPP_
