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

// JSON instance and layout files. Integers only. Parse errors throw
// InputError.

#ifndef ANGLEPACK_IO_H_
#define ANGLEPACK_IO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "anglepack/geometry.h"
#include "anglepack/oracle.h"
#include "anglepack/packing.h"

namespace anglepack::io {

// {"pieces": [[a,b,c,d], ...], "max_end_x": X, "max_end_y": Y,
//  "mode": "fixed" | "rot_mirror"}
Instance parse_instance(const std::string& text);
std::string write_instance(const Instance& instance);
Instance read_instance_file(const std::filesystem::path& path);

struct PlacedPiece {
  int piece = 0;
  int orientation = 0;
  int x = 0;
  int y = 0;
  std::vector<Rect> rects;  // absolute

  friend bool operator==(const PlacedPiece&, const PlacedPiece&) = default;
};

struct RunStats {
  int64_t nodes = 0;
  int64_t fails = 0;
  int64_t ms = 0;

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

// Objective and extents are null when there is no layout.
struct LayoutFile {
  std::string status;
  std::optional<int> objective;
  std::optional<int> end_x;
  std::optional<int> end_y;
  std::vector<PlacedPiece> placements;
  RunStats stats;

  bool has_layout() const { return end_x.has_value() && end_y.has_value(); }
  Layout layout() const;

  friend bool operator==(const LayoutFile&, const LayoutFile&) = default;
};

LayoutFile parse_layout(const std::string& text);
std::string write_layout(const LayoutFile& file);
LayoutFile read_layout_file(const std::filesystem::path& path);

LayoutFile to_layout_file(const Instance& instance, const Outcome& outcome);
LayoutFile to_layout_file(const Instance& instance, const OracleResult& result,
                          int64_t ms);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace anglepack::io

#endif  // ANGLEPACK_IO_H_
