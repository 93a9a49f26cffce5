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

#include "path_data.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "core.hpp"

namespace bluefish {
namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_separators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == ',')) {
      ++pos_;
    }
  }

  bool done() {
    skip_separators();
    return pos_ >= text_.size();
  }

  bool at_command() {
    skip_separators();
    return pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != 'e' && text_[pos_] != 'E';
  }

  char command() { return text_[pos_++]; }

  double number() {
    skip_separators();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    // from_chars rejects a leading '+'.
    if (begin != end && *begin == '+') ++begin;
    double value = 0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) {
      fail("expected a number");
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  double flag() {
    skip_separators();
    if (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
      return text_[pos_++] == '1' ? 1 : 0;
    }
    fail("expected an arc flag");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Code::kSchemaError, "path data: " + what + " at offset " +
                                        std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<PathBounds> path_control_bounds(std::string_view d) {
  Scanner in(d);
  std::optional<PathBounds> bounds;
  const auto add = [&](double x, double y) {
    if (!bounds) {
      bounds = PathBounds{x, y, x, y};
      return;
    }
    bounds->min_x = std::min(bounds->min_x, x);
    bounds->min_y = std::min(bounds->min_y, y);
    bounds->max_x = std::max(bounds->max_x, x);
    bounds->max_y = std::max(bounds->max_y, y);
  };

  double cx = 0, cy = 0;          // current point
  double sx = 0, sy = 0;          // subpath start
  double ctrl_x = 0, ctrl_y = 0;  // last control point, for S/T
  char previous = 0;
  char command = 0;
  bool first = true;

  while (!in.done()) {
    if (in.at_command()) {
      command = in.command();
    } else if (command == 0) {
      in.fail("path must start with a command");
    } else if (command == 'M') {
      command = 'L';  // implicit lineto after moveto
    } else if (command == 'm') {
      command = 'l';
    } else if (command == 'Z' || command == 'z') {
      in.fail("unexpected number after closepath");
    }
    if (first && command != 'M' && command != 'm') {
      in.fail("path must start with a moveto");
    }
    first = false;
    const bool rel = std::islower(static_cast<unsigned char>(command));
    const double ox = rel ? cx : 0;
    const double oy = rel ? cy : 0;
    const char upper =
        static_cast<char>(std::toupper(static_cast<unsigned char>(command)));
    switch (upper) {
      case 'M': {
        cx = ox + in.number();
        cy = oy + in.number();
        sx = cx;
        sy = cy;
        add(cx, cy);
        break;
      }
      case 'L': {
        cx = ox + in.number();
        cy = oy + in.number();
        add(cx, cy);
        break;
      }
      case 'H': {
        cx = ox + in.number();
        add(cx, cy);
        break;
      }
      case 'V': {
        cy = oy + in.number();
        add(cx, cy);
        break;
      }
      case 'C': {
        const double x1 = ox + in.number(), y1 = oy + in.number();
        const double x2 = ox + in.number(), y2 = oy + in.number();
        cx = ox + in.number();
        cy = oy + in.number();
        add(x1, y1);
        add(x2, y2);
        add(cx, cy);
        ctrl_x = x2;
        ctrl_y = y2;
        break;
      }
      case 'S': {
        const bool follows = previous == 'C' || previous == 'S';
        const double x1 = follows ? 2 * cx - ctrl_x : cx;
        const double y1 = follows ? 2 * cy - ctrl_y : cy;
        const double x2 = ox + in.number(), y2 = oy + in.number();
        cx = ox + in.number();
        cy = oy + in.number();
        add(x1, y1);
        add(x2, y2);
        add(cx, cy);
        ctrl_x = x2;
        ctrl_y = y2;
        break;
      }
      case 'Q': {
        const double x1 = ox + in.number(), y1 = oy + in.number();
        cx = ox + in.number();
        cy = oy + in.number();
        add(x1, y1);
        add(cx, cy);
        ctrl_x = x1;
        ctrl_y = y1;
        break;
      }
      case 'T': {
        const bool follows = previous == 'Q' || previous == 'T';
        const double x1 = follows ? 2 * cx - ctrl_x : cx;
        const double y1 = follows ? 2 * cy - ctrl_y : cy;
        cx = ox + in.number();
        cy = oy + in.number();
        add(x1, y1);
        add(cx, cy);
        ctrl_x = x1;
        ctrl_y = y1;
        break;
      }
      case 'A': {
        in.number();  // rx
        in.number();  // ry
        in.number();  // x-axis-rotation
        in.flag();
        in.flag();
        cx = ox + in.number();
        cy = oy + in.number();
        add(cx, cy);
        break;
      }
      case 'Z': {
        cx = sx;
        cy = sy;
        break;
      }
      default:
        in.fail(std::string("unknown command '") + command + "'");
    }
    previous = upper;
  }
  return bounds;
}

}  // namespace bluefish
