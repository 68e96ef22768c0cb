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

// L-shaped piece ("angle") semantics.
//
// A piece [a,b,c,d] is the max(a,c) x max(b,d) bounding box with a
// |c-a| x |b-d| corner notch removed. The notch corner is chosen by the signs
// of (c-a) and (b-d):
//
//   c > a, b > d  ->  bottom-left
//   c > a, b < d  ->  bottom-right
//   c < a, b > d  ->  top-left
//   c < a, b < d  ->  top-right
//
// and a == c or b == d degenerates to a plain rectangle. Coordinates are
// integer grid units, origin at the bottom-left, x to the right, y upward.

#ifndef ANGLEPACK_GEOMETRY_H_
#define ANGLEPACK_GEOMETRY_H_

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace anglepack {

// Thrown for malformed user input (bad piece sizes, unknown ids, bad files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnglePiece {
  int id = 0;  // 1-based, instance local
  int a = 1;
  int b = 1;
  int c = 1;
  int d = 1;

  int width() const;
  int height() const;
  int notch_width() const;
  int notch_height() const;
  int area() const;

  friend bool operator==(const AnglePiece&, const AnglePiece&) = default;
};

// Throws InputError unless all four sizes are >= 1.
void check_piece(const AnglePiece& piece);

enum class Pattern { NotchBL, NotchBR, NotchTL, NotchTR, Rect };

std::string_view to_string(Pattern p);

enum class Mode { Fixed, RotMirror };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view s);

struct Rect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  int area() const { return w * h; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

struct Cell {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// One constant step of an axis profile. start == end in every profile this
// library produces; the pair is kept so trapezoid parts can be represented.
struct ProfilePart {
  int dur = 0;
  int start = 0;
  int end = 0;

  friend bool operator==(const ProfilePart&, const ProfilePart&) = default;
};

using StepProfile = std::vector<ProfilePart>;

// One concrete orientation of a piece. `orient` indexes the list returned by
// orientations(piece, Mode::RotMirror); 0 is always the identity.
// `transform` is the raw symmetry id, rotation * 2 + mirror.
struct OrientedPiece {
  int piece_id = 0;
  int orient = 0;
  int transform = 0;
  int w = 0;
  int h = 0;
  std::vector<Rect> rects;  // offsets relative to the piece origin
  int notch_w = 0;
  int notch_h = 0;

  int area() const;
  friend bool operator==(const OrientedPiece&, const OrientedPiece&) = default;
};

struct Profiles {
  StepProfile x;  // per column: occupied height
  StepProfile y;  // per row: occupied width
};

Pattern classify(const AnglePiece& piece);

// Identity orientation split into one rectangle (degenerate piece) or two.
OrientedPiece decompose(const AnglePiece& piece);

// Applies symmetry `transform` (rotation * 2 + mirror; mirror is applied
// first, then `rotation` quarter turns counter-clockwise) to `op`.
OrientedPiece transform_piece(const OrientedPiece& op, int transform);

// Fixed: identity only. RotMirror: the 8 symmetries, deduplicated by cell
// set, rotation index major and mirror minor.
std::vector<OrientedPiece> orientations(const AnglePiece& piece, Mode mode);

Profiles profiles(const OrientedPiece& op);

// Sorted unit cells covered by `op` placed at `origin`.
std::vector<Cell> cells(const OrientedPiece& op, Cell origin = {});

int profile_integral(const StepProfile& p);

struct Instance {
  std::vector<AnglePiece> pieces;
  int max_end_x = 1;
  int max_end_y = 1;
  Mode mode = Mode::Fixed;

  int total_area() const;
  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws InputError on an empty piece list, bad caps, bad pieces, or ids that
// are not 1..n in order.
void check_instance(const Instance& instance);

// Builds an instance, numbering the pieces 1..n.
Instance make_instance(const std::vector<std::vector<int>>& sizes,
                       int max_end_x, int max_end_y, Mode mode);

struct Placement {
  int piece_id = 0;
  int orient = 0;
  int x = 0;
  int y = 0;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Layout {
  std::vector<Placement> placements;
  int end_x = 0;
  int end_y = 0;

  friend bool operator==(const Layout&, const Layout&) = default;
};

enum class ViolationKind { IllegalOrientation, OutOfBounds, Overlap, ExtentTooSmall };

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  int piece_id = 0;
  int other_piece_id = 0;  // Overlap only
  Cell cell;               // OutOfBounds / Overlap: first offending cell
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks a layout against an instance. Throws InputError when the layout
// does not have exactly one placement per piece, names an unknown piece, or
// uses an orientation index outside the rotation/mirror list.
ValidationReport validate_layout(const Instance& instance, const Layout& layout);

// Oriented piece for a placement, with the same input checks as
// validate_layout (mode legality is not checked).
OrientedPiece oriented_for(const Instance& instance, const Placement& p);

}  // namespace anglepack

#endif  // ANGLEPACK_GEOMETRY_H_
