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

#include "anglepack/geometry.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace anglepack {

int AnglePiece::width() const { return std::max(a, c); }
int AnglePiece::height() const { return std::max(b, d); }
int AnglePiece::notch_width() const { return std::abs(c - a); }
int AnglePiece::notch_height() const { return std::abs(b - d); }
int AnglePiece::area() const {
  return width() * height() - notch_width() * notch_height();
}

void check_piece(const AnglePiece& piece) {
  if (piece.a < 1 || piece.b < 1 || piece.c < 1 || piece.d < 1) {
    std::ostringstream os;
    os << "piece " << piece.id << ": sizes [" << piece.a << "," << piece.b
       << "," << piece.c << "," << piece.d << "] must all be >= 1";
    throw InputError(os.str());
  }
}

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::NotchBL: return "NotchBL";
    case Pattern::NotchBR: return "NotchBR";
    case Pattern::NotchTL: return "NotchTL";
    case Pattern::NotchTR: return "NotchTR";
    case Pattern::Rect: return "Rect";
  }
  return "?";
}

std::string_view to_string(Mode m) {
  return m == Mode::Fixed ? "fixed" : "rot_mirror";
}

Mode parse_mode(std::string_view s) {
  if (s == "fixed") return Mode::Fixed;
  if (s == "rot_mirror") return Mode::RotMirror;
  throw InputError("unknown mode '" + std::string(s) +
                   "' (expected fixed or rot_mirror)");
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::IllegalOrientation: return "illegal_orientation";
    case ViolationKind::OutOfBounds: return "out_of_bounds";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::ExtentTooSmall: return "extent_too_small";
  }
  return "?";
}

int OrientedPiece::area() const {
  int sum = 0;
  for (const Rect& r : rects) sum += r.area();
  return sum;
}

Pattern classify(const AnglePiece& piece) {
  if (piece.a == piece.c || piece.b == piece.d) return Pattern::Rect;
  if (piece.c > piece.a) {
    return piece.b > piece.d ? Pattern::NotchBL : Pattern::NotchBR;
  }
  return piece.b > piece.d ? Pattern::NotchTL : Pattern::NotchTR;
}

OrientedPiece decompose(const AnglePiece& piece) {
  check_piece(piece);
  OrientedPiece op;
  op.piece_id = piece.id;
  op.w = piece.width();
  op.h = piece.height();

  const Pattern pattern = classify(piece);
  if (pattern == Pattern::Rect) {
    op.rects.push_back({0, 0, op.w, op.h});
    return op;
  }
  const int nw = piece.notch_width();
  const int nh = piece.notch_height();
  op.notch_w = nw;
  op.notch_h = nh;
  const bool notch_left =
      pattern == Pattern::NotchBL || pattern == Pattern::NotchTL;
  const bool notch_bottom =
      pattern == Pattern::NotchBL || pattern == Pattern::NotchBR;

  if (piece.b > piece.d) {
    // Full-width band away from the notch, arm beside the notch.
    op.rects.push_back({0, notch_bottom ? nh : 0, op.w, op.h - nh});
    op.rects.push_back(
        {notch_left ? nw : 0, notch_bottom ? 0 : op.h - nh, op.w - nw, nh});
  } else {
    // Full-height column away from the notch, arm above/below the notch.
    op.rects.push_back({notch_left ? nw : 0, 0, op.w - nw, op.h});
    op.rects.push_back(
        {notch_left ? 0 : op.w - nw, notch_bottom ? nh : 0, nw, op.h - nh});
  }
  return op;
}

namespace {

Rect mirror_rect(const Rect& r, int box_w) {
  return {box_w - r.x - r.w, r.y, r.w, r.h};
}

// Quarter turn counter-clockwise inside a box_w x box_h box; the result lives
// in a box_h x box_w box.
Rect rotate_rect(const Rect& r, int box_h) {
  return {box_h - r.y - r.h, r.x, r.h, r.w};
}

StepProfile merge_runs(const std::vector<int>& heights) {
  StepProfile out;
  for (int v : heights) {
    if (!out.empty() && out.back().start == v) {
      ++out.back().dur;
    } else {
      out.push_back({1, v, v});
    }
  }
  return out;
}

}  // namespace

OrientedPiece transform_piece(const OrientedPiece& op, int transform) {
  if (transform < 0 || transform > 7) {
    throw InputError("transform id must be in 0..7");
  }
  OrientedPiece out = op;
  out.transform = transform;
  if (transform % 2 == 1) {
    for (Rect& r : out.rects) r = mirror_rect(r, out.w);
  }
  for (int turn = 0; turn < transform / 2; ++turn) {
    for (Rect& r : out.rects) r = rotate_rect(r, out.h);
    std::swap(out.w, out.h);
    std::swap(out.notch_w, out.notch_h);
  }
  return out;
}

std::vector<OrientedPiece> orientations(const AnglePiece& piece, Mode mode) {
  const OrientedPiece identity = decompose(piece);
  if (mode == Mode::Fixed) return {identity};

  std::vector<OrientedPiece> out;
  std::set<std::vector<Cell>> seen;
  for (int t = 0; t < 8; ++t) {
    OrientedPiece op = transform_piece(identity, t);
    if (!seen.insert(cells(op)).second) continue;
    op.orient = static_cast<int>(out.size());
    out.push_back(std::move(op));
  }
  return out;
}

Profiles profiles(const OrientedPiece& op) {
  std::vector<int> cols(op.w, 0);
  std::vector<int> rows(op.h, 0);
  for (const Rect& r : op.rects) {
    for (int i = r.x; i < r.x + r.w; ++i) cols[i] += r.h;
    for (int j = r.y; j < r.y + r.h; ++j) rows[j] += r.w;
  }
  return {merge_runs(cols), merge_runs(rows)};
}

std::vector<Cell> cells(const OrientedPiece& op, Cell origin) {
  std::vector<Cell> out;
  out.reserve(op.area());
  for (const Rect& r : op.rects) {
    for (int i = 0; i < r.w; ++i) {
      for (int j = 0; j < r.h; ++j) {
        out.push_back({origin.col + r.x + i, origin.row + r.y + j});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int profile_integral(const StepProfile& p) {
  int sum = 0;
  for (const ProfilePart& part : p) {
    sum += part.dur * std::max(part.start, part.end);
  }
  return sum;
}

int Instance::total_area() const {
  int sum = 0;
  for (const AnglePiece& p : pieces) sum += p.area();
  return sum;
}

void check_instance(const Instance& instance) {
  if (instance.pieces.empty()) throw InputError("instance has no pieces");
  if (instance.max_end_x < 1 || instance.max_end_y < 1) {
    throw InputError("max_end_x and max_end_y must be >= 1");
  }
  for (size_t i = 0; i < instance.pieces.size(); ++i) {
    const AnglePiece& p = instance.pieces[i];
    if (p.id != static_cast<int>(i) + 1) {
      throw InputError("piece ids must be 1..n in input order");
    }
    check_piece(p);
  }
}

Instance make_instance(const std::vector<std::vector<int>>& sizes,
                       int max_end_x, int max_end_y, Mode mode) {
  Instance inst;
  inst.max_end_x = max_end_x;
  inst.max_end_y = max_end_y;
  inst.mode = mode;
  int id = 1;
  for (const auto& s : sizes) {
    if (s.size() != 4) throw InputError("a piece needs exactly 4 sizes");
    inst.pieces.push_back({id++, s[0], s[1], s[2], s[3]});
  }
  check_instance(inst);
  return inst;
}

OrientedPiece oriented_for(const Instance& instance, const Placement& p) {
  if (p.piece_id < 1 || p.piece_id > static_cast<int>(instance.pieces.size())) {
    throw InputError("unknown piece id " + std::to_string(p.piece_id));
  }
  const AnglePiece& piece = instance.pieces[p.piece_id - 1];
  std::vector<OrientedPiece> all = orientations(piece, Mode::RotMirror);
  if (p.orient < 0 || p.orient >= static_cast<int>(all.size())) {
    throw InputError("piece " + std::to_string(p.piece_id) +
                     ": orientation index " + std::to_string(p.orient) +
                     " out of range 0.." + std::to_string(all.size() - 1));
  }
  return all[p.orient];
}

ValidationReport validate_layout(const Instance& instance,
                                 const Layout& layout) {
  const size_t n = instance.pieces.size();
  if (layout.placements.size() != n) {
    throw InputError("layout has " + std::to_string(layout.placements.size()) +
                     " placements, instance has " + std::to_string(n) +
                     " pieces");
  }
  std::vector<bool> placed(n, false);
  for (const Placement& p : layout.placements) {
    oriented_for(instance, p);  // id and orientation range checks
    if (placed[p.piece_id - 1]) {
      throw InputError("piece " + std::to_string(p.piece_id) +
                       " placed more than once");
    }
    placed[p.piece_id - 1] = true;
  }

  ValidationReport report;
  std::map<Cell, int> owner;
  std::set<std::pair<int, int>> reported_pairs;
  int extent_x = 0;
  int extent_y = 0;
  for (const Placement& p : layout.placements) {
    const OrientedPiece op = oriented_for(instance, p);
    if (instance.mode == Mode::Fixed && p.orient != 0) {
      report.violations.push_back(
          {ViolationKind::IllegalOrientation, p.piece_id, 0, {},
           "piece " + std::to_string(p.piece_id) + ": orientation " +
               std::to_string(p.orient) + " not allowed in fixed mode"});
    }
    extent_x = std::max(extent_x, p.x + op.w);
    extent_y = std::max(extent_y, p.y + op.h);
    bool out_reported = false;
    for (const Cell& c : cells(op, {p.x, p.y})) {
      const bool outside = c.col < 0 || c.row < 0 || c.col >= layout.end_x ||
                           c.row >= layout.end_y;
      if (outside && !out_reported) {
        out_reported = true;
        report.violations.push_back(
            {ViolationKind::OutOfBounds, p.piece_id, 0, c,
             "piece " + std::to_string(p.piece_id) + " covers cell (" +
                 std::to_string(c.col) + "," + std::to_string(c.row) +
                 ") outside the " + std::to_string(layout.end_x) + "x" +
                 std::to_string(layout.end_y) + " frame"});
      }
      auto [it, inserted] = owner.emplace(c, p.piece_id);
      if (!inserted) {
        const int other = it->second;
        if (reported_pairs.insert({other, p.piece_id}).second) {
          report.violations.push_back(
              {ViolationKind::Overlap, other, p.piece_id, c,
               "pieces " + std::to_string(other) + " and " +
                   std::to_string(p.piece_id) + " share cell (" +
                   std::to_string(c.col) + "," + std::to_string(c.row) + ")"});
        }
      }
    }
  }
  if (layout.end_x < extent_x || layout.end_y < extent_y) {
    report.violations.push_back(
        {ViolationKind::ExtentTooSmall, 0, 0, {},
         "frame " + std::to_string(layout.end_x) + "x" +
             std::to_string(layout.end_y) + " smaller than the extent " +
             std::to_string(extent_x) + "x" + std::to_string(extent_y)});
  }
  return report;
}

}  // namespace anglepack
