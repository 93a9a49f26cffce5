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

#include "relations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "path_data.hpp"

namespace bluefish {
namespace {

constexpr std::string_view kHorizontalAlignments[] = {"left", "centerX",
                                                      "right"};
constexpr std::string_view kVerticalAlignments[] = {"top", "centerY",
                                                    "bottom"};

std::string fmt(double v) { return format_number(v); }

// ---------------------------------------------------------------------------
// Marks

void set_local_box(LayoutContext& ctx, double width, double height) {
  ctx.set_own(Dim::kLeft, 0);
  ctx.set_own(Dim::kWidth, width);
  ctx.set_own(Dim::kTop, 0);
  ctx.set_own(Dim::kHeight, height);
}

void layout_rect(LayoutContext& ctx) {
  set_local_box(ctx, ctx.number("width"), ctx.number("height"));
}

void layout_circle(LayoutContext& ctx) {
  const double d = 2 * ctx.number("r");
  set_local_box(ctx, d, d);
}

void layout_ellipse(LayoutContext& ctx) {
  set_local_box(ctx, 2 * ctx.number("rx"), 2 * ctx.number("ry"));
}

void layout_path(LayoutContext& ctx) {
  const auto bounds = path_control_bounds(ctx.string("d"));
  const PathBounds b = bounds.value_or(PathBounds{});
  ctx.paint_props()["_origin"] = Json::array({b.min_x, b.min_y});
  set_local_box(ctx, b.max_x - b.min_x, b.max_y - b.min_y);
}

void layout_text(LayoutContext& ctx) {
  const auto m = measure_text(ctx.string("content"), ctx.number("fontSize"),
                              ctx.string("fontFamily"));
  set_local_box(ctx, m.width, m.height);
}

// ---------------------------------------------------------------------------
// Relations

std::vector<NodeId> children_of(LayoutContext& ctx) { return ctx.children(); }

void layout_stack(LayoutContext& ctx, Axis main) {
  ctx.layout_children();
  const auto kids = children_of(ctx);
  const double spacing = ctx.number("spacing");
  for (const auto& [axis, slot] : alignment_targets(ctx.string("alignment"))) {
    if (axis == other(main)) align_axis(ctx, kids, axis, slot);
  }
  distribute_axis(ctx, kids, main, spacing);
  fit_to_children(ctx, Axis::kHorizontal);
  fit_to_children(ctx, Axis::kVertical);
}

void layout_align(LayoutContext& ctx) {
  ctx.layout_children();
  const auto kids = children_of(ctx);
  for (const auto& [axis, slot] : alignment_targets(ctx.string("alignment"))) {
    align_axis(ctx, kids, axis, slot);
    fit_to_children(ctx, axis);
  }
}

void layout_distribute(LayoutContext& ctx) {
  ctx.layout_children();
  const auto kids = children_of(ctx);
  const Axis axis = ctx.string("direction") == "vertical" ? Axis::kVertical
                                                          : Axis::kHorizontal;
  distribute_axis(ctx, kids, axis, ctx.number("spacing"));
  fit_to_children(ctx, axis);
}

void layout_background(LayoutContext& ctx) {
  ctx.layout_children();
  const auto kids = children_of(ctx);
  const double padding = ctx.number("padding");
  for (Axis axis : kAxes) {
    std::vector<bool> fixed(kids.size());
    std::optional<double> origin;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      fixed[i] = ctx.is_placed(kids[i], axis);
    }
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (!fixed[i]) continue;
      const double start = *ctx.box(kids[i], axis).start;
      origin = origin ? std::min(*origin, start) : start;
    }
    const double unfixed_start = origin.value_or(padding);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (!fixed[i]) {
        ctx.place(kids[i], dim_of(axis, Slot::kStart), unfixed_start);
      }
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (NodeId kid : kids) {
      const AxisValues b = ctx.box(kid, axis);
      lo = std::min(lo, *b.start);
      hi = std::max(hi, *b.end);
    }
    ctx.set_own(dim_of(axis, Slot::kStart), lo - padding);
    ctx.set_own(dim_of(axis, Slot::kExtent), hi - lo + 2 * padding);
  }
}

void layout_connector(LayoutContext& ctx) {
  ctx.layout_children();
  const auto kids = children_of(ctx);
  for (Axis axis : kAxes) {
    for (NodeId kid : kids) {
      if (!ctx.is_placed(kid, axis)) {
        ctx.place(kid, dim_of(axis, Slot::kStart), 0);
      }
    }
  }
  const AxisValues ax = ctx.box(kids[0], Axis::kHorizontal);
  const AxisValues ay = ctx.box(kids[0], Axis::kVertical);
  const AxisValues bx = ctx.box(kids[1], Axis::kHorizontal);
  const AxisValues by = ctx.box(kids[1], Axis::kVertical);
  fit_to_children(ctx, Axis::kHorizontal);
  fit_to_children(ctx, Axis::kVertical);

  const double gap = ctx.number("gap");
  const double dx = *bx.center - *ax.center;
  const double dy = *by.center - *ay.center;
  const double length = std::hypot(dx, dy);

  // Fraction of the center-to-center segment that lies inside a box.
  const auto inside_fraction = [&](const AxisValues& x, const AxisValues& y) {
    double t = std::numeric_limits<double>::infinity();
    if (dx != 0) t = std::min(t, (*x.size / 2) / std::abs(dx));
    if (dy != 0) t = std::min(t, (*y.size / 2) / std::abs(dy));
    return t;
  };
  double visible = 0;
  double t_from = 0;
  double t_to = 0;
  if (length > 0) {
    t_from = inside_fraction(ax, ay);
    t_to = inside_fraction(bx, by);
    visible = (1 - t_from - t_to) * length - 2 * gap;
  }
  if (!(visible > kTolerance)) {
    ctx.paint_props()["_degenerate"] = true;
    ctx.warn(Code::kDegenerateConnector,
             "{0} has no room to draw between {1} and {2}",
             {ctx.self(), ctx.graph().resolve(kids[0]),
              ctx.graph().resolve(kids[1])});
    return;
  }
  const double ux = dx / length;
  const double uy = dy / length;
  const double x1 = *ax.center + dx * t_from + ux * gap;
  const double y1 = *ay.center + dy * t_from + uy * gap;
  const double x2 = *bx.center - dx * t_to - ux * gap;
  const double y2 = *by.center - dy * t_to - uy * gap;
  ctx.paint_props()["_points"] = Json::array({x1, y1, x2, y2});
}

void layout_group(LayoutContext& ctx) {
  ctx.layout_children();
  if (ctx.children().empty()) return;
  fit_to_children(ctx, Axis::kHorizontal);
  fit_to_children(ctx, Axis::kVertical);
}

// ---------------------------------------------------------------------------
// Paint

using Attrs = SvgWriter::Attrs;

std::string text_prop(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return format_number(v.get<double>());
  return v.dump();
}

void add_style(const Json& props, Attrs& attrs) {
  if (const auto fill = props.find("fill"); fill != props.end()) {
    attrs.emplace_back("fill", text_prop(*fill));
  }
  if (const auto stroke = props.find("stroke"); stroke != props.end()) {
    attrs.emplace_back("stroke", text_prop(*stroke));
    if (const auto w = props.find("strokeWidth"); w != props.end()) {
      attrs.emplace_back("stroke-width", text_prop(*w));
    }
  }
  if (const auto dash = props.find("strokeDasharray"); dash != props.end()) {
    attrs.emplace_back("stroke-dasharray", text_prop(*dash));
  }
}

void paint_box_mark(std::string_view kind, const Json& props,
                    const AxisValues& x, const AxisValues& y, SvgWriter& out) {
  Attrs attrs;
  add_style(props, attrs);
  if (kind == "ellipse" || kind == "circle") {
    attrs.emplace_back("cx", fmt(*x.center));
    attrs.emplace_back("cy", fmt(*y.center));
    if (kind == "circle") {
      attrs.emplace_back("r", fmt(*x.size / 2));
    } else {
      attrs.emplace_back("rx", fmt(*x.size / 2));
      attrs.emplace_back("ry", fmt(*y.size / 2));
    }
    out.leaf(kind, std::move(attrs));
    return;
  }
  attrs.emplace_back("x", fmt(*x.start));
  attrs.emplace_back("y", fmt(*y.start));
  attrs.emplace_back("width", fmt(*x.size));
  attrs.emplace_back("height", fmt(*y.size));
  if (const auto rx = props.find("rx"); rx != props.end() &&
                                        rx->get<double>() != 0) {
    attrs.emplace_back("rx", fmt(rx->get<double>()));
  }
  out.leaf("rect", std::move(attrs));
}

void paint_rect(const PaintInput& in, SvgWriter& out) {
  paint_box_mark("rect", in.props, in.x, in.y, out);
}
void paint_circle(const PaintInput& in, SvgWriter& out) {
  paint_box_mark("circle", in.props, in.x, in.y, out);
}
void paint_ellipse(const PaintInput& in, SvgWriter& out) {
  paint_box_mark("ellipse", in.props, in.x, in.y, out);
}

void paint_path(const PaintInput& in, SvgWriter& out) {
  Attrs attrs;
  add_style(in.props, attrs);
  attrs.emplace_back("d", in.props.at("d").get<std::string>());
  double ox = 0, oy = 0;
  if (const auto origin = in.props.find("_origin"); origin != in.props.end()) {
    ox = (*origin)[0].get<double>();
    oy = (*origin)[1].get<double>();
  }
  const double tx = *in.x.start - ox;
  const double ty = *in.y.start - oy;
  if (fmt(tx) != "0" || fmt(ty) != "0") {
    attrs.emplace_back("transform",
                       "translate(" + fmt(tx) + " " + fmt(ty) + ")");
  }
  out.leaf("path", std::move(attrs));
}

void paint_text(const PaintInput& in, SvgWriter& out) {
  Attrs attrs;
  add_style(in.props, attrs);
  attrs.emplace_back("dominant-baseline", "text-before-edge");
  attrs.emplace_back("font-family", text_prop(in.props.at("fontFamily")));
  attrs.emplace_back("font-size", text_prop(in.props.at("fontSize")));
  attrs.emplace_back("x", fmt(*in.x.start));
  attrs.emplace_back("y", fmt(*in.y.start));
  out.text("text", std::move(attrs),
           in.props.at("content").get<std::string>());
}

Json default_background() {
  return Json{{"kind", "rect"},
              {"props", {{"fill", "none"}, {"stroke", "black"},
                         {"strokeWidth", 1}}}};
}

void paint_background(const PaintInput& in, SvgWriter& out) {
  const Json bg = in.props.value("background", default_background());
  const std::string kind = bg.at("kind").get<std::string>();
  Json props = bg.value("props", Json::object());
  // Same defaults as the standalone marks.
  if (!props.contains("fill")) props["fill"] = "black";
  if (!props.contains("strokeWidth")) props["strokeWidth"] = 1;
  paint_box_mark(kind, props, in.x, in.y, out);
}

void paint_arrow(const PaintInput& in, SvgWriter& out) {
  const auto points = in.props.find("_points");
  if (points == in.props.end()) return;
  const std::string stroke = text_prop(in.props.at("stroke"));
  const std::string marker = "bf-arrowhead-" + std::to_string(in.id.value);
  out.open("defs");
  out.open("marker", {{"id", marker},
                      {"markerHeight", "4"},
                      {"markerWidth", "4"},
                      {"orient", "auto"},
                      {"refX", "4"},
                      {"refY", "2"}});
  out.leaf("path", {{"d", "M 0 0 L 4 2 L 0 4 z"}, {"fill", stroke}});
  out.close("marker");
  out.close("defs");
  const auto& p = *points;
  Attrs attrs;
  attrs.emplace_back("d", "M " + fmt(p[0].get<double>()) + " " +
                              fmt(p[1].get<double>()) + " L " +
                              fmt(p[2].get<double>()) + " " +
                              fmt(p[3].get<double>()));
  attrs.emplace_back("fill", "none");
  attrs.emplace_back("marker-end", "url(#" + marker + ")");
  attrs.emplace_back("stroke", stroke);
  attrs.emplace_back("stroke-width", text_prop(in.props.at("strokeWidth")));
  if (const auto dash = in.props.find("strokeDasharray");
      dash != in.props.end()) {
    attrs.emplace_back("stroke-dasharray", text_prop(*dash));
  }
  out.leaf("path", std::move(attrs));
}

void paint_line(const PaintInput& in, SvgWriter& out) {
  const auto points = in.props.find("_points");
  if (points == in.props.end()) return;
  const auto& p = *points;
  Attrs attrs;
  Json style = in.props;
  style.erase("fill");
  add_style(style, attrs);
  attrs.emplace_back("x1", fmt(p[0].get<double>()));
  attrs.emplace_back("y1", fmt(p[1].get<double>()));
  attrs.emplace_back("x2", fmt(p[2].get<double>()));
  attrs.emplace_back("y2", fmt(p[3].get<double>()));
  out.leaf("line", std::move(attrs));
}

// ---------------------------------------------------------------------------
// Kind specs

PropSpec number(std::string name, Json default_value = nullptr,
                double minimum = -std::numeric_limits<double>::infinity(),
                bool exclusive = false) {
  PropSpec p;
  p.name = std::move(name);
  p.type = PropType::kNumber;
  p.default_value = std::move(default_value);
  p.minimum = minimum;
  p.exclusive_minimum = exclusive;
  return p;
}

PropSpec required_number(std::string name, double minimum = 0) {
  PropSpec p = number(std::move(name), nullptr, minimum);
  p.required = true;
  return p;
}

PropSpec string(std::string name, Json default_value = nullptr,
                PropType type = PropType::kString) {
  PropSpec p;
  p.name = std::move(name);
  p.type = type;
  p.default_value = std::move(default_value);
  return p;
}

PropSpec enumeration(std::string name, std::vector<std::string> choices,
                     Json default_value = nullptr) {
  PropSpec p;
  p.name = std::move(name);
  p.type = PropType::kEnum;
  p.choices = std::move(choices);
  p.default_value = std::move(default_value);
  p.required = p.default_value.is_null();
  return p;
}

std::vector<PropSpec> shape_style() {
  return {string("fill", "black"), string("stroke"),
          number("strokeWidth", 1, 0),
          string("strokeDasharray", nullptr, PropType::kText)};
}

ElementKindSpec mark(std::string kind, std::vector<PropSpec> props,
                     LayoutFn layout, PaintFn paint) {
  ElementKindSpec spec;
  spec.kind = std::move(kind);
  spec.props = std::move(props);
  spec.max_children = 0;
  spec.layout = std::move(layout);
  spec.paint = std::move(paint);
  return spec;
}

ElementKindSpec relation(std::string kind, std::vector<PropSpec> props,
                         std::size_t min_children, LayoutFn layout) {
  ElementKindSpec spec;
  spec.kind = std::move(kind);
  spec.props = std::move(props);
  spec.min_children = min_children;
  spec.layout = std::move(layout);
  return spec;
}

std::vector<PropSpec> concat(std::vector<PropSpec> a,
                             const std::vector<PropSpec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

void LayoutContext::layout_children() {
  for (NodeId child : graph_.node(self_).children) {
    if (!graph_.node(child).is_ref) driver_.layout_node(child);
  }
}

double LayoutContext::number(std::string_view key) const {
  const Json& p = props();
  const auto it = p.find(key);
  if (it == p.end() || !it->is_number()) {
    throw Error(Code::kMissingProp,
                "{0} has no numeric prop '" + std::string(key) + "'",
                {self_});
  }
  return it->get<double>();
}

std::string LayoutContext::string(std::string_view key) const {
  const Json& p = props();
  const auto it = p.find(key);
  if (it == p.end() || !it->is_string()) {
    throw Error(Code::kMissingProp,
                "{0} has no string prop '" + std::string(key) + "'", {self_});
  }
  return it->get<std::string>();
}

std::size_t count_scalar_values(std::string_view utf8) {
  std::size_t n = 0;
  for (unsigned char c : utf8) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

TextExtent measure_text(std::string_view content, double font_size,
                        std::string_view /*font_family*/) {
  const auto chars = static_cast<double>(count_scalar_values(content));
  return TextExtent{0.6 * font_size * chars, 1.2 * font_size};
}

std::vector<std::pair<Axis, Slot>> alignment_targets(std::string_view name) {
  constexpr Axis h = Axis::kHorizontal;
  constexpr Axis v = Axis::kVertical;
  for (std::size_t i = 0; i < 3; ++i) {
    if (name == kHorizontalAlignments[i]) return {{h, static_cast<Slot>(i)}};
    if (name == kVerticalAlignments[i]) return {{v, static_cast<Slot>(i)}};
  }
  struct Combined {
    std::string_view name;
    Slot vertical;
    Slot horizontal;
  };
  static constexpr Combined kCombined[] = {
      {"topLeft", Slot::kStart, Slot::kStart},
      {"topCenter", Slot::kStart, Slot::kCenter},
      {"topRight", Slot::kStart, Slot::kEnd},
      {"centerLeft", Slot::kCenter, Slot::kStart},
      {"center", Slot::kCenter, Slot::kCenter},
      {"centerRight", Slot::kCenter, Slot::kEnd},
      {"bottomLeft", Slot::kEnd, Slot::kStart},
      {"bottomCenter", Slot::kEnd, Slot::kCenter},
      {"bottomRight", Slot::kEnd, Slot::kEnd},
  };
  for (const auto& c : kCombined) {
    if (name == c.name) return {{h, c.horizontal}, {v, c.vertical}};
  }
  throw Error(Code::kBadEnumValue,
              "unknown alignment '" + std::string(name) + "'");
}

void align_axis(LayoutContext& ctx, std::span<const NodeId> children,
                Axis axis, Slot slot) {
  if (children.empty()) return;
  std::vector<bool> fixed(children.size());
  std::optional<std::size_t> anchor;
  for (std::size_t i = 0; i < children.size(); ++i) {
    fixed[i] = ctx.is_placed(children[i], axis);
    if (fixed[i] && !anchor) anchor = i;
  }
  const Dim dim = dim_of(axis, slot);
  double guideline = 0;
  if (anchor) guideline = *ctx.box(children[*anchor], axis).get(slot);
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!fixed[i]) {
      ctx.place(children[i], dim, guideline);
      continue;
    }
    if (i == *anchor) continue;
    const double value = *ctx.box(children[i], axis).get(slot);
    if (std::abs(value - guideline) > kTolerance) {
      Scenegraph& g = ctx.graph();
      const NodeId target = g.resolve(children[i]);
      const NodeId anchor_target = g.resolve(children[*anchor]);
      throw Error(
          Code::kDimensionConflict,
          "{0} cannot align " + std::string(dim_name(dim)) + " of {1}: it "
          "is already " + fmt(value) + " as placed by {2}, but the guideline "
          "is " + fmt(guideline) + " as placed by {3} for {4}",
          {ctx.self(), target, ctx.placer(children[i], axis).value_or(target),
           ctx.placer(children[*anchor], axis).value_or(anchor_target),
           anchor_target});
    }
  }
}

void distribute_axis(LayoutContext& ctx, std::span<const NodeId> children,
                     Axis axis, double spacing) {
  const std::size_t n = children.size();
  if (n == 0) return;
  std::vector<bool> fixed(n);
  std::optional<std::size_t> anchor;
  for (std::size_t i = 0; i < n; ++i) {
    fixed[i] = ctx.is_placed(children[i], axis);
    if (fixed[i] && !anchor) anchor = i;
  }
  std::vector<double> extents(n);
  for (std::size_t i = 0; i < n; ++i) extents[i] = ctx.extent(children[i], axis);

  const std::size_t k = anchor.value_or(0);
  std::vector<double> slots(n);
  slots[k] = anchor ? *ctx.box(children[k], axis).start : 0.0;
  for (std::size_t i = k + 1; i < n; ++i) {
    slots[i] = slots[i - 1] + extents[i - 1] + spacing;
  }
  for (std::size_t i = k; i-- > 0;) {
    slots[i] = slots[i + 1] - spacing - extents[i];
  }

  const Dim dim = dim_of(axis, Slot::kStart);
  for (std::size_t i = 0; i < n; ++i) {
    if (!fixed[i]) {
      ctx.place(children[i], dim, slots[i]);
      continue;
    }
    if (i == k) continue;
    const double value = *ctx.box(children[i], axis).start;
    if (std::abs(value - slots[i]) > kTolerance) {
      Scenegraph& g = ctx.graph();
      const NodeId target = g.resolve(children[i]);
      const NodeId anchor_target = g.resolve(children[k]);
      throw Error(
          Code::kDimensionConflict,
          "{0} cannot space " + std::string(dim_name(dim)) + " of {1}: it is "
          "already " + fmt(value) + " as placed by {2}, but its slot is " +
          fmt(slots[i]) + " relative to {4} as placed by {3}",
          {ctx.self(), target, ctx.placer(children[i], axis).value_or(target),
           ctx.placer(children[k], axis).value_or(anchor_target),
           anchor_target});
    }
  }
}

void fit_to_children(LayoutContext& ctx, Axis axis) {
  const auto kids = ctx.children();
  if (kids.empty()) return;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (NodeId kid : kids) {
    const AxisValues b = ctx.box(kid, axis);
    lo = std::min(lo, *b.start);
    hi = std::max(hi, *b.end);
  }
  ctx.set_own(dim_of(axis, Slot::kStart), lo);
  ctx.set_own(dim_of(axis, Slot::kExtent), hi - lo);
}

void register_standard_kinds(Registry& registry) {
  registry.register_kind(mark(
      "rect",
      concat({required_number("width"), required_number("height"),
              number("rx", 0, 0)},
             shape_style()),
      layout_rect, paint_rect));
  registry.register_kind(mark("circle",
                              concat({required_number("r")}, shape_style()),
                              layout_circle, paint_circle));
  registry.register_kind(
      mark("ellipse",
           concat({required_number("rx"), required_number("ry")},
                  shape_style()),
           layout_ellipse, paint_ellipse));
  {
    PropSpec d = string("d");
    d.required = true;
    registry.register_kind(mark(
        "path",
        {d, string("stroke", "black"), number("strokeWidth", 1, 0),
         string("strokeDasharray", nullptr, PropType::kText),
         string("fill", "none")},
        layout_path, paint_path));
  }
  {
    PropSpec content = string("content");
    content.required = true;
    registry.register_kind(
        mark("text",
             {content,
              number("fontSize", 16, 0, true),
              string("fontFamily", "sans-serif"), string("fill", "black")},
             layout_text, paint_text));
  }
  registry.register_kind(relation(
      "stackV",
      {number("spacing", 0),
       enumeration("alignment", {"left", "centerX", "right"}, "centerX")},
      1, [](LayoutContext& ctx) { layout_stack(ctx, Axis::kVertical); }));
  registry.register_kind(relation(
      "stackH",
      {number("spacing", 0),
       enumeration("alignment", {"top", "centerY", "bottom"}, "centerY")},
      1, [](LayoutContext& ctx) { layout_stack(ctx, Axis::kHorizontal); }));
  registry.register_kind(relation(
      "align",
      {enumeration("alignment",
                   {"left", "centerX", "right", "top", "centerY", "bottom",
                    "topLeft", "topCenter", "topRight", "centerLeft",
                    "center", "centerRight", "bottomLeft", "bottomCenter",
                    "bottomRight"})},
      1, layout_align));
  {
    PropSpec spacing = number("spacing");
    spacing.required = true;
    registry.register_kind(relation(
        "distribute",
        {enumeration("direction", {"vertical", "horizontal"}), spacing}, 2,
        layout_distribute));
  }
  {
    PropSpec background;
    background.name = "background";
    background.type = PropType::kElement;
    background.element_kinds = {"rect", "ellipse"};
    ElementKindSpec spec = relation(
        "background", {number("padding", 10, 0), background}, 1,
        layout_background);
    spec.paint = paint_background;
    registry.register_kind(std::move(spec));
  }
  {
    ElementKindSpec spec = relation(
        "arrow",
        {string("stroke", "black"), number("strokeWidth", 1.5, 0),
         number("gap", 5, 0),
         string("strokeDasharray", nullptr, PropType::kText)},
        2, layout_connector);
    spec.max_children = 2;
    spec.paint = paint_arrow;
    spec.paint_after_children = true;
    registry.register_kind(std::move(spec));
  }
  {
    ElementKindSpec spec = relation(
        "line",
        {string("stroke", "black"), number("strokeWidth", 1, 0),
         string("strokeDasharray", nullptr, PropType::kText),
         number("gap", 0, 0)},
        2, layout_connector);
    spec.max_children = 2;
    spec.paint = paint_line;
    spec.paint_after_children = true;
    registry.register_kind(std::move(spec));
  }
  registry.register_kind(relation("group", {}, 0, layout_group));
}

}  // namespace bluefish
