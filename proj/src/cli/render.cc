// Copyright 2026 The anglepack Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anglepack/render.h"

#include <sstream>
#include <string>
#include <vector>

namespace anglepack::render {
namespace {

// Golden-angle hue walk keeps neighbouring ids apart.
std::string fill_for(int piece_id) {
  const int hue = (piece_id * 137) % 360;
  return "hsl(" + std::to_string(hue) + ",65%,60%)";
}

}  // namespace

char piece_char(int piece_id) {
  if (piece_id >= 1 && piece_id <= 9) return static_cast<char>('0' + piece_id);
  if (piece_id >= 10 && piece_id < 36) {
    return static_cast<char>('A' + piece_id - 10);
  }
  if (piece_id >= 36 && piece_id < 62) {
    return static_cast<char>('a' + piece_id - 36);
  }
  return '?';
}

std::string svg(const io::LayoutFile& layout, int cell_px) {
  if (!layout.has_layout()) throw InputError("nothing to render: no layout");
  const int w = *layout.end_x;
  const int h = *layout.end_y;
  const int margin = cell_px / 2;
  std::ostringstream out;
  const int px_w = w * cell_px + 2 * margin;
  const int px_h = h * cell_px + 2 * margin;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px_w
      << "\" height=\"" << px_h << "\" viewBox=\"0 0 " << px_w << ' ' << px_h
      << "\">\n";
  for (const io::PlacedPiece& p : layout.placements) {
    for (const Rect& r : p.rects) {
      const int top = h - (r.y + r.h);
      out << "  <rect x=\"" << margin + r.x * cell_px << "\" y=\""
          << margin + top * cell_px << "\" width=\"" << r.w * cell_px
          << "\" height=\"" << r.h * cell_px << "\" fill=\""
          << fill_for(p.piece) << "\" data-piece=\"" << p.piece << "\"/>\n";
    }
  }
  out << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
      << w * cell_px << "\" height=\"" << h * cell_px
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string ascii(const io::LayoutFile& layout) {
  if (!layout.has_layout()) throw InputError("nothing to render: no layout");
  const int w = *layout.end_x;
  const int h = *layout.end_y;
  if (w <= 0 || h <= 0) throw InputError("layout extents must be positive");
  std::vector<std::string> grid(h, std::string(w, '.'));
  for (const io::PlacedPiece& p : layout.placements) {
    for (const Rect& r : p.rects) {
      for (int y = r.y; y < r.y + r.h; ++y) {
        for (int x = r.x; x < r.x + r.w; ++x) {
          if (x < 0 || y < 0 || x >= w || y >= h) continue;
          char& c = grid[y][x];
          c = c == '.' ? piece_char(p.piece) : '#';
        }
      }
    }
  }
  std::string out;
  for (int y = h - 1; y >= 0; --y) out += grid[y] + "\n";
  return out;
}

}  // namespace anglepack::render
