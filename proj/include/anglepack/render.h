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

#ifndef ANGLEPACK_RENDER_H_
#define ANGLEPACK_RENDER_H_

#include <string>

#include "anglepack/io.h"

namespace anglepack::render {

// One <rect> per sub-rectangle filled by piece id, then the end_x x end_y
// frame. The y axis points up in the drawing.
std::string svg(const io::LayoutFile& layout, int cell_px = 40);

// Top row first. Pieces 1..9 print as digits, then A..Z, then a..z; free
// cells are '.'. Overlapping cells print '#'.
std::string ascii(const io::LayoutFile& layout);

char piece_char(int piece_id);

}  // namespace anglepack::render

#endif  // ANGLEPACK_RENDER_H_
