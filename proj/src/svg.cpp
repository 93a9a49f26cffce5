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

#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace bluefish {

std::string format_number(double value) {
  if (!std::isfinite(value)) return "0";
  // nearbyint honours the default round-to-nearest-even mode.
  const double hundredths = std::nearbyint(value * 100.0);
  if (hundredths == 0) return "0";
  const bool negative = hundredths < 0;
  const auto magnitude = static_cast<std::uint64_t>(std::abs(hundredths));
  std::string out = negative ? "-" : "";
  out += std::to_string(magnitude / 100);
  const auto frac = magnitude % 100;
  if (frac != 0) {
    out += '.';
    out += static_cast<char>('0' + frac / 10);
    if (frac % 10 != 0) out += static_cast<char>('0' + frac % 10);
  }
  return out;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void SvgWriter::start_tag(std::string_view tag, Attrs& attrs) {
  std::stable_sort(attrs.begin(), attrs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  out_.append(static_cast<std::size_t>(depth_) * 2, ' ');
  out_ += '<';
  out_ += tag;
  for (const auto& [key, value] : attrs) {
    out_ += ' ';
    out_ += key;
    out_ += "=\"";
    out_ += xml_escape(value);
    out_ += '"';
  }
}

void SvgWriter::open(std::string_view tag, Attrs attrs) {
  start_tag(tag, attrs);
  out_ += ">\n";
  ++depth_;
}

void SvgWriter::close(std::string_view tag) {
  --depth_;
  out_.append(static_cast<std::size_t>(depth_) * 2, ' ');
  out_ += "</";
  out_ += tag;
  out_ += ">\n";
}

void SvgWriter::leaf(std::string_view tag, Attrs attrs) {
  start_tag(tag, attrs);
  out_ += "/>\n";
}

void SvgWriter::text(std::string_view tag, Attrs attrs,
                     std::string_view content) {
  start_tag(tag, attrs);
  out_ += '>';
  out_ += xml_escape(content);
  out_ += "</";
  out_ += tag;
  out_ += ">\n";
}

}  // namespace bluefish
