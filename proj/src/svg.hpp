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

#ifndef BLUEFISH_SVG_HPP_
#define BLUEFISH_SVG_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bluefish {

// At most two fractional digits, round-half-even, no trailing zeros, and
// never "-0".
std::string format_number(double value);

std::string xml_escape(std::string_view text);

// Minimal SVG/XML emitter. Attributes are always written in alphabetical
// order so output is byte-stable regardless of call-site order.
class SvgWriter {
 public:
  using Attrs = std::vector<std::pair<std::string, std::string>>;

  void open(std::string_view tag, Attrs attrs = {});
  void close(std::string_view tag);
  void leaf(std::string_view tag, Attrs attrs);
  void text(std::string_view tag, Attrs attrs, std::string_view content);

  const std::string& str() const { return out_; }
  std::string release() { return std::move(out_); }

 private:
  void start_tag(std::string_view tag, Attrs& attrs);

  std::string out_;
  int depth_ = 0;
};

}  // namespace bluefish

#endif  // BLUEFISH_SVG_HPP_
