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

#include <cmath>
#include <map>
#include <optional>

#include "doctest.h"
#include "geometry.hpp"
#include "test_support.hpp"

using namespace bluefish;
using testing_support::Rng;

namespace {

constexpr NodeId kS{1};
constexpr NodeId kT{2};

PartialBBox box_with(std::initializer_list<std::pair<Dim, double>> fields) {
  PartialBBox b;
  for (auto [d, v] : fields) b.store(d, v);
  return b;
}

Code code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Code::kInternal;
}

}  // namespace

TEST_CASE("bbox_get derives missing fields on one axis") {
  CHECK(bbox_get(box_with({{Dim::kLeft, 10}, {Dim::kWidth, 20}}), Dim::kRight) == 30);
  CHECK(bbox_get(box_with({{Dim::kCenterX, 0}, {Dim::kWidth, 30}}), Dim::kLeft) == -15);
  CHECK_FALSE(bbox_get(box_with({{Dim::kTop, 5}}), Dim::kBottom).has_value());
  CHECK(bbox_get(box_with({{Dim::kTop, 5}}), Dim::kTop) == 5);
  CHECK(bbox_get(box_with({{Dim::kLeft, 2}, {Dim::kRight, 8}}), Dim::kCenterX) == 5);
  CHECK(bbox_get(box_with({{Dim::kCenterY, 4}, {Dim::kBottom, 10}}), Dim::kHeight) == 12);
  // Axes are independent.
  CHECK_FALSE(bbox_get(box_with({{Dim::kLeft, 0}, {Dim::kWidth, 3}}), Dim::kTop).has_value());
}

TEST_CASE("bbox_get rejects stored fields that disagree") {
  const auto bad = box_with({{Dim::kLeft, 0}, {Dim::kWidth, 10}, {Dim::kRight, 11}});
  CHECK(code_of([&] { (void)bbox_get(bad, Dim::kCenterX); }) == Code::kInconsistentBBox);
  const auto within = box_with({{Dim::kLeft, 0}, {Dim::kWidth, 10}, {Dim::kRight, 10 + 1e-8}});
  CHECK(bbox_get(within, Dim::kCenterX).has_value());
  const auto negative = box_with({{Dim::kLeft, 10}, {Dim::kRight, 0}});
  CHECK(code_of([&] { (void)bbox_get(negative, Dim::kWidth); }) == Code::kInconsistentBBox);
}

TEST_CASE("bbox_set records owners and enforces single ownership") {
  PartialBBox b;
  BBoxOwners o;
  bbox_set(b, o, Dim::kWidth, 10, kS);
  CHECK(b.stored(Dim::kWidth) == 10);
  CHECK(o[Dim::kWidth] == kS);
  bbox_set(b, o, Dim::kWidth, 10, kS);
  CHECK(o[Dim::kWidth] == kS);

  bbox_set(b, o, Dim::kLeft, 0, kS);
  try {
    bbox_set(b, o, Dim::kLeft, 5, kT);
    FAIL("expected a conflict");
  } catch (const Error& e) {
    CHECK(e.code() == Code::kDimensionConflict);
    REQUIRE(e.nodes().size() >= 2);
    CHECK(e.nodes()[0] == kS);
    CHECK(e.nodes()[1] == kT);
  }
  CHECK(code_of([&] { bbox_set(b, o, Dim::kWidth, 11, kS); }) == Code::kDimensionConflict);
  CHECK(code_of([&] { bbox_set(b, o, Dim::kHeight, -1, kS); }) == Code::kInvalidExtent);
  CHECK(code_of([&] { bbox_set(b, o, Dim::kTop, NAN, kS); }) == Code::kInvalidExtent);
  // Derived fields stay unset.
  CHECK_FALSE(b.stored(Dim::kRight).has_value());
  CHECK(bbox_get(b, Dim::kRight) == 10);
}

TEST_CASE("bbox_set rejects values contradicting derived fields") {
  PartialBBox b;
  BBoxOwners o;
  bbox_set(b, o, Dim::kLeft, 0, kS);
  bbox_set(b, o, Dim::kWidth, 10, kS);
  CHECK(code_of([&] { bbox_set(b, o, Dim::kRight, 12, kT); }) == Code::kDimensionConflict);
  bbox_set(b, o, Dim::kRight, 10, kT);
  CHECK(o[Dim::kRight] == kT);
}

TEST_CASE("compose_translations sums components") {
  CHECK(compose_translations({}) == Translate{0.0, 0.0});
  const std::vector<Translate> stack_refs = {{0.0, 0.0}, {-5.0, 0.0}};
  CHECK(compose_translations(stack_refs) == Translate{-5.0, 0.0});
  const std::vector<Translate> three = {{3.0, 4.0}, {-1.0, 2.0}, {0.0, -6.0}};
  CHECK(compose_translations(three) == Translate{2.0, 0.0});
  const std::vector<Translate> missing = {{1.0, std::nullopt}};
  CHECK(code_of([&] { (void)compose_translations(missing); }) == Code::kUndefinedTransform);
}

TEST_CASE("dimension names round-trip") {
  for (Dim d : kAllDims) {
    CHECK(parse_dim(dim_name(d)) == d);
    CHECK(dim_of(axis_of(d), slot_of(d)) == d);
  }
  CHECK_FALSE(parse_dim("diagonal").has_value());
}

// Brute force: every pair of stored fields on an axis pins (start, size);
// all pairs must agree, and derived reads must match the solution.
TEST_CASE("property: derivation agrees with solving the axis identities") {
  Rng rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    const Axis axis = rng.coin() ? Axis::kHorizontal : Axis::kVertical;
    const double start = rng.int_in(-400, 400) / 4.0;
    const double size = rng.int_in(0, 400) / 4.0;
    const double truth[4] = {start, start + size / 2, start + size, size};
    PartialBBox b;
    std::vector<Slot> stored;
    for (int s = 0; s < 4; ++s) {
      if (rng.coin(0.4)) {
        b.store(dim_of(axis, static_cast<Slot>(s)), truth[s]);
        stored.push_back(static_cast<Slot>(s));
      }
    }
    // Solve each pair independently.
    std::optional<std::pair<double, double>> solution;
    for (std::size_t i = 0; i < stored.size(); ++i) {
      for (std::size_t j = i + 1; j < stored.size(); ++j) {
        // value = start * a + size * c for each slot.
        const auto coef = [](Slot s) -> std::pair<double, double> {
          switch (s) {
            case Slot::kStart: return {1, 0};
            case Slot::kCenter: return {1, 0.5};
            case Slot::kEnd: return {1, 1};
            case Slot::kExtent: return {0, 1};
          }
          return {0, 0};
        };
        const auto [a1, c1] = coef(stored[i]);
        const auto [a2, c2] = coef(stored[j]);
        const double v1 = truth[static_cast<int>(stored[i])];
        const double v2 = truth[static_cast<int>(stored[j])];
        const double det = a1 * c2 - a2 * c1;
        const std::pair<double, double> sol{(v1 * c2 - v2 * c1) / det, (a1 * v2 - a2 * v1) / det};
        if (solution) {
          CHECK(std::abs(solution->first - sol.first) < 1e-9);
          CHECK(std::abs(solution->second - sol.second) < 1e-9);
        }
        solution = sol;
      }
    }
    for (int s = 0; s < 4; ++s) {
      const auto got = bbox_get(b, dim_of(axis, static_cast<Slot>(s)));
      const bool is_stored =
          std::find(stored.begin(), stored.end(), static_cast<Slot>(s)) != stored.end();
      if (solution) {
        const double expect[4] = {solution->first, solution->first + solution->second / 2,
                                  solution->first + solution->second, solution->second};
        REQUIRE(got.has_value());
        CHECK(std::abs(*got - expect[s]) < 1e-9);
      } else if (is_stored) {
        CHECK(got == truth[s]);
      } else {
        CHECK_FALSE(got.has_value());
      }
    }
  }
}

TEST_CASE("property: fields are written once and never change") {
  Rng rng(12);
  for (int iter = 0; iter < 300; ++iter) {
    PartialBBox b;
    BBoxOwners o;
    std::map<Dim, std::pair<double, NodeId>> first;
    for (int step = 0; step < 30; ++step) {
      const Dim d = kAllDims[static_cast<std::size_t>(rng.int_in(0, 7))];
      const double v = rng.int_in(0, 6);
      const NodeId w{static_cast<std::uint32_t>(rng.int_in(0, 2))};
      try {
        bbox_set(b, o, d, v, w);
      } catch (const Error& e) {
        CHECK((e.code() == Code::kDimensionConflict || e.code() == Code::kInvalidExtent ||
               e.code() == Code::kInconsistentBBox));
      }
      for (Dim f : kAllDims) {
        if (!o[f]) continue;
        const auto it = first.find(f);
        if (it == first.end()) {
          first[f] = {*b.stored(f), *o[f]};
        } else {
          CHECK(*b.stored(f) == it->second.first);
          CHECK(*o[f] == it->second.second);
        }
      }
    }
  }
}

TEST_CASE("property: compose_translations is associative") {
  Rng rng(13);
  const auto random_chain = [&] {
    std::vector<Translate> c;
    for (int i = rng.int_in(0, 4); i > 0; --i) {
      c.push_back({rng.int_in(-100, 100) / 8.0, rng.int_in(-100, 100) / 8.0});
    }
    return c;
  };
  for (int iter = 0; iter < 500; ++iter) {
    const auto a = random_chain(), b = random_chain(), c = random_chain();
    const auto ab = compose_translations(std::vector<Translate>(
        {compose_translations(a), compose_translations(b)}));
    const auto left = compose_translations(std::vector<Translate>({ab, compose_translations(c)}));
    const auto bc = compose_translations(std::vector<Translate>(
        {compose_translations(b), compose_translations(c)}));
    const auto right = compose_translations(std::vector<Translate>({compose_translations(a), bc}));
    CHECK(left == right);
  }
}
