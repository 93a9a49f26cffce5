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

#include "renderer.hpp"

#include <algorithm>

#include "doctest.h"
#include "engine.hpp"
#include "generators.hpp"
#include "svg.hpp"
#include "test_support.hpp"

using namespace bluefish;
using namespace testing_support;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

std::vector<std::string> lines_with(const std::string& text, const std::string& needle) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    if (line.find(needle) != std::string::npos) {
      line.erase(0, line.find_first_not_of(' '));
      out.push_back(line);
    }
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("numbers print with at most two decimals") {
  CHECK(format_number(0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(10) == "10");
  CHECK(format_number(-5) == "-5");
  CHECK(format_number(67.2) == "67.2");
  CHECK(format_number(1.0 / 3) == "0.33");
  CHECK(format_number(2.0 / 3) == "0.67");
  CHECK(format_number(-0.001) == "0");
  CHECK(format_number(12.345678) == "12.35");
  CHECK(format_number(100.10) == "100.1");
}

TEST_CASE("canvas sizes round up to hundredths") {
  CHECK(round_up_hundredths(10) == 10);
  CHECK(round_up_hundredths(408.6) == doctest::Approx(408.6));
  CHECK(round_up_hundredths(1.001) == doctest::Approx(1.01));
  CHECK(round_up_hundredths(0) == 0);
}

TEST_CASE("a single rect renders to a fixed document") {
  const CompileResult r = compile(doc(Json{{"kind", "rect"}, {"props", {{"width", 10}, {"height", 20}, {"fill", "red"}}}}));
  REQUIRE(r.ok());
  CHECK(*r.svg ==
        "<svg height=\"20\" viewBox=\"0 0 10 20\" width=\"10\" xmlns=\"http://www.w3.org/2000/svg\">\n"
        "  <g>\n"
        "    <g>\n"
        "      <rect fill=\"red\" height=\"20\" width=\"10\" x=\"0\" y=\"0\"/>\n"
        "    </g>\n"
        "  </g>\n"
        "</svg>\n");
}

TEST_CASE("the planets picture has the expected canvas and marks") {
  const CompileResult r = compile(Json::parse(read_file(BLUEFISH_FIXTURES "/planets.json")));
  REQUIRE(r.ok());
  const std::string& svg = *r.svg;
  CHECK(svg.rfind("<svg height=\"122.2\" viewBox=\"0 0 408.6 122.2\" width=\"408.6\"", 0) == 0);
  CHECK(svg.find("<g transform=\"translate(18.6 26.2)\">") != std::string::npos);
  CHECK(count(svg, "<circle") == 4);
  CHECK(count(svg, "<rect") == 2);
  CHECK(count(svg, ">Mercury</text>") == 1);
  CHECK(svg.find("font-size=\"16\"") != std::string::npos);
  const auto g = named_geometry(*r.scene);
  CHECK(g.at("mercury").x == doctest::Approx(10));
  CHECK(g.at("mercury").y == doctest::Approx(33));
  CHECK(g.at("mercuryLabel").x == doctest::Approx(-8.6));
  CHECK(g.at("mercuryLabel").y == doctest::Approx(-16.2));
  CHECK(g.at("label").width == doctest::Approx(87.2));
  CHECK(g.at("label").height == doctest::Approx(99.2));
}

TEST_CASE("stroke dash arrays pass through") {
  const CompileResult r = compile(doc(Json{
      {"kind", "rect"},
      {"props", {{"width", 4}, {"height", 4}, {"stroke", "blue"}, {"strokeDasharray", "2 1"}}}}));
  REQUIRE(r.ok());
  CHECK(r.svg->find("stroke=\"blue\" stroke-dasharray=\"2 1\" stroke-width=\"1\"") != std::string::npos);
}

TEST_CASE("text content is escaped") {
  const CompileResult r = compile(doc(Json{{"kind", "text"}, {"props", {{"content", "a<b & c"}}}}));
  REQUIRE(r.ok());
  CHECK(r.svg->find(">a&lt;b &amp; c</text>") != std::string::npos);
}

TEST_CASE("the scene dump records geometry and ownership") {
  const CompileResult r = compile(Json::parse(read_file(BLUEFISH_FIXTURES "/stack_refs.json")));
  REQUIRE(r.ok());
  const Json dump = Json::parse(*r.dump);
  CHECK(dump.at("bluefishScene") == 1);
  CHECK(dump.at("geometry").at("a") == Json{{"height", 20}, {"width", 10}, {"x", -5}, {"y", 0}});
  CHECK(dump.at("geometry").at("b") == Json{{"height", 10}, {"width", 30}, {"x", -15}, {"y", 50}});
  const Json& stack = dump.at("nodes").at(3);
  CHECK(stack.at("kind") == "stackV");
  CHECK(stack.at("translate") == Json{{"x", 0}, {"y", 0}});
  CHECK(stack.at("transformOwners") == Json{{"x", 3}, {"y", 3}});
  CHECK(dump.at("nodes").at(1).at("transformOwners") == Json{{"x", 3}, {"y", 3}});
  const Json& ref = dump.at("nodes").at(4);
  CHECK(ref.at("ref") == 1);
  CHECK_FALSE(ref.contains("x"));
  CHECK(dump.at("size") == Json{{"height", 60}, {"width", 30}});
}

TEST_CASE("duplicate names are qualified in the geometry section") {
  const CompileResult r = compile(Json::parse(read_file(BLUEFISH_FIXTURES "/scoped_names.json")));
  REQUIRE(r.ok());
  const Json geometry = Json::parse(*r.dump).at("geometry");
  for (const auto& [key, value] : geometry.items()) {
    CHECK(value.contains("x"));
  }
}

TEST_CASE("property: every layout node paints one group and refs paint nothing") {
  Rng rng(61);
  for (int iter = 0; iter < 200; ++iter) {
    const Json d = random_ref_free_document(rng, 4);
    const CompileResult r = compile(d);
    REQUIRE(r.ok());
    std::size_t marks = 0;
    for (const auto& n : r.scene->nodes) marks += n.kind == "rect" || n.kind == "circle" || n.kind == "ellipse";
    CHECK(count(*r.svg, "<g") == r.scene->nodes.size() + 1);
    CHECK(count(*r.svg, "<rect") + count(*r.svg, "<circle") + count(*r.svg, "<ellipse") >= marks);
  }
  const CompileResult stack_refs = compile(Json::parse(read_file(BLUEFISH_FIXTURES "/stack_refs.json")));
  CHECK(count(*stack_refs.svg, "<g") == 5);
  CHECK(count(*stack_refs.svg, "<rect") == 2);
}

TEST_CASE("property: rendering is byte-identical across runs") {
  Rng rng(62);
  for (int iter = 0; iter < 100; ++iter) {
    const std::string text = random_ref_free_document(rng, 4).dump();
    const Engine a;
    const Engine b;
    CompileOptions options;
    options.dump = true;
    const CompileResult x = a.compile(text, options);
    const CompileResult y = b.compile(text, options);
    CHECK(*x.svg == *y.svg);
    CHECK(*x.dump == *y.dump);
  }
}

// Selecting marks through refs instead of nesting them paints the same marks.
TEST_CASE("property: refs are transparent to painting") {
  Rng rng(63);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = rng.int_in(1, 5);
    std::vector<std::pair<int, int>> sizes;
    for (int i = 0; i < n; ++i) sizes.emplace_back(rng.int_in(1, 30), rng.int_in(1, 30));
    const bool vertical = rng.coin();
    const auto forms = stack_forms(sizes, rng.int_in(0, 10), vertical,
                                   vertical ? rng.pick(horizontal_alignments())
                                            : rng.pick(vertical_alignments()));
    const CompileResult a = compile(forms.nested);
    const CompileResult b = compile(forms.denested);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(lines_with(*a.svg, "<rect") == lines_with(*b.svg, "<rect"));
    CHECK(lines_with(*a.svg, "translate(") == lines_with(*b.svg, "translate("));
    CHECK(a.svg->substr(0, a.svg->find('\n')) == b.svg->substr(0, b.svg->find('\n')));
  }
}

TEST_CASE("generated documents have exactly the requested size") {
  for (std::size_t n : {1u, 2u, 9u, 10u, 100u, 1000u, 4321u}) {
    const auto text = generate_document("nested-stacks", n);
    REQUIRE(text);
    const CompileResult r = Engine().compile(*text, CompileOptions{false, false});
    REQUIRE(r.ok());
    CHECK(r.node_count() == n);
  }
  CHECK(insertion_sort_like_node_count(7) == 76);
  const CompileResult sort7 = Engine().compile(insertion_sort_like(7), CompileOptions{true, false});
  REQUIRE(sort7.ok());
  CHECK(sort7.node_count() == 76);
  CHECK(count(*sort7.svg, "marker-end") == 6);
  CHECK(insertion_sort_like_rows(76) == 7);
  CHECK_FALSE(generate_document("nope", 10).has_value());
  CHECK_FALSE(generate_document("nested-stacks", 0).has_value());
}
