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

#include <algorithm>
#include <random>

#include <doctest.h>

#include "anglepack/geometry.h"
#include "support/support.h"

using namespace anglepack;
using anglepack::testing::CellSet;

namespace {

AnglePiece piece(int a, int b, int c, int d, int id = 1) {
  return {id, a, b, c, d};
}

std::vector<Rect> sorted(std::vector<Rect> rs) {
  std::sort(rs.begin(), rs.end(), [](const Rect& p, const Rect& q) {
    return std::tie(p.x, p.y, p.w, p.h) < std::tie(q.x, q.y, q.w, q.h);
  });
  return rs;
}

CellSet as_set(const std::vector<Cell>& cells) {
  CellSet out;
  for (const Cell& c : cells) out.insert({c.col, c.row});
  return out;
}

std::vector<AnglePiece> table_pieces() {
  std::vector<AnglePiece> out;
  for (const auto& s : testing::kTable1) out.push_back(piece(s[0], s[1], s[2], s[3]));
  for (const auto& s : testing::kTable2) out.push_back(piece(s[0], s[1], s[2], s[3]));
  return out;
}

}  // namespace

TEST_CASE("classify follows the notch convention") {
  CHECK(classify(piece(2, 4, 3, 1)) == Pattern::NotchBL);
  CHECK(classify(piece(2, 1, 4, 3)) == Pattern::NotchBR);
  CHECK(classify(piece(2, 3, 2, 3)) == Pattern::Rect);
  CHECK(classify(piece(6, 2, 2, 3)) == Pattern::NotchTR);
  CHECK(classify(piece(3, 2, 1, 1)) == Pattern::NotchTL);
  CHECK(classify(piece(2, 2, 5, 2)) == Pattern::Rect);
}

TEST_CASE("decompose examples") {
  SUBCASE("notch bottom left") {
    const OrientedPiece op = decompose(piece(2, 4, 3, 1));
    CHECK(op.w == 3);
    CHECK(op.h == 4);
    CHECK(sorted(op.rects) == sorted({{0, 3, 3, 1}, {1, 0, 2, 3}}));
    CHECK(op.notch_w == 1);
    CHECK(op.notch_h == 3);
  }
  SUBCASE("rectangle") {
    const OrientedPiece op = decompose(piece(2, 3, 2, 3));
    CHECK(op.w == 2);
    CHECK(op.h == 3);
    CHECK(op.rects == std::vector<Rect>{{0, 0, 2, 3}});
  }
  SUBCASE("notch bottom right, column split") {
    const OrientedPiece op = decompose(piece(2, 1, 4, 3));
    CHECK(op.w == 4);
    CHECK(op.h == 3);
    CHECK(sorted(op.rects) == sorted({{0, 0, 2, 3}, {2, 2, 2, 1}}));
  }
  SUBCASE("invalid sizes are rejected") {
    CHECK_THROWS_AS(decompose(piece(0, 1, 1, 1)), InputError);
  }
}

TEST_CASE("orientation counts") {
  CHECK(orientations(piece(2, 3, 2, 3), Mode::RotMirror).size() == 2);
  CHECK(orientations(piece(1, 2, 2, 1), Mode::RotMirror).size() == 4);
  CHECK(orientations(piece(3, 7, 7, 2), Mode::RotMirror).size() == 8);
  CHECK(orientations(piece(1, 1, 1, 1), Mode::RotMirror).size() == 1);
  CHECK(orientations(piece(3, 7, 7, 2), Mode::Fixed).size() == 1);
}

TEST_CASE("orientation order is rotation major, mirror minor") {
  const auto all = orientations(piece(3, 7, 7, 2), Mode::RotMirror);
  for (size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].orient == static_cast<int>(i));
    CHECK(all[i].transform == static_cast<int>(i));
  }
  const auto sq = orientations(piece(2, 3, 2, 3), Mode::RotMirror);
  CHECK(sq[0].transform == 0);
  CHECK(sq[1].transform == 2);
}

TEST_CASE("profiles examples") {
  SUBCASE("[2,1,4,3]") {
    const Profiles p = profiles(decompose(piece(2, 1, 4, 3)));
    CHECK(p.x == StepProfile{{2, 3, 3}, {2, 1, 1}});
    CHECK(p.y == StepProfile{{2, 2, 2}, {1, 4, 4}});
  }
  SUBCASE("[2,3,2,3]") {
    const Profiles p = profiles(decompose(piece(2, 3, 2, 3)));
    CHECK(p.x == StepProfile{{2, 3, 3}});
    CHECK(p.y == StepProfile{{3, 2, 2}});
  }
  SUBCASE("[2,4,3,1]") {
    const Profiles p = profiles(decompose(piece(2, 4, 3, 1)));
    CHECK(p.x == StepProfile{{1, 1, 1}, {2, 4, 4}});
    CHECK(p.y == StepProfile{{3, 2, 2}, {1, 3, 3}});
  }
}

TEST_CASE("cells examples") {
  CHECK(as_set(cells(decompose(piece(2, 3, 2, 3)))) ==
        CellSet{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
  CHECK(as_set(cells(decompose(piece(1, 2, 2, 1)))) ==
        CellSet{{1, 0}, {0, 1}, {1, 1}});
  const auto moved = cells(decompose(piece(2, 4, 3, 1)), {1, 1});
  CHECK(moved.size() == 9);
  for (const Cell& c : moved) {
    CHECK(c.col >= 1);
    CHECK(c.row >= 1);
  }
}

TEST_CASE("geometry agrees with an independent rasterization") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 400; ++trial) {
    const AnglePiece p = piece(dim(rng), dim(rng), dim(rng), dim(rng));
    const CellSet base = testing::raster(p.a, p.b, p.c, p.d);
    CHECK(as_set(cells(decompose(p))) == base);
    for (int t = 0; t < 8; ++t) {
      CHECK(as_set(cells(transform_piece(decompose(p), t))) ==
            testing::transform_cells(base, t));
    }
  }
}

TEST_CASE("orientation dedup is exact") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const AnglePiece p = piece(dim(rng), dim(rng), dim(rng), dim(rng));
    const auto all = orientations(p, Mode::RotMirror);
    std::set<CellSet> listed;
    for (const OrientedPiece& op : all) listed.insert(as_set(cells(op)));
    CHECK(listed.size() == all.size());
    std::set<CellSet> reachable;
    const CellSet base = testing::raster(p.a, p.b, p.c, p.d);
    for (int t = 0; t < 8; ++t) reachable.insert(testing::transform_cells(base, t));
    CHECK(listed == reachable);
  }
}

TEST_CASE("oriented piece invariants over random pieces") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    const AnglePiece p = piece(dim(rng), dim(rng), dim(rng), dim(rng));
    for (const OrientedPiece& op : orientations(p, Mode::RotMirror)) {
      CHECK(op.area() == p.area());
      CHECK(static_cast<int>(cells(op).size()) == p.area());
      CHECK((op.rects.size() == 1 || op.rects.size() == 2));
      for (const Rect& r : op.rects) {
        CHECK(r.x >= 0);
        CHECK(r.y >= 0);
        CHECK(r.x + r.w <= op.w);
        CHECK(r.y + r.h <= op.h);
        CHECK(r.w > 0);
        CHECK(r.h > 0);
      }
      if (op.rects.size() == 2) {
        const Rect& a = op.rects[0];
        const Rect& b = op.rects[1];
        // Edge-connected: they share a boundary segment of positive length.
        const bool share_x = std::min(a.x + a.w, b.x + b.w) > std::max(a.x, b.x);
        const bool share_y = std::min(a.y + a.h, b.y + b.h) > std::max(a.y, b.y);
        const bool touch_y = a.y + a.h == b.y || b.y + b.h == a.y;
        const bool touch_x = a.x + a.w == b.x || b.x + b.w == a.x;
        CHECK(((share_x && touch_y) || (share_y && touch_x)));
      }
      const Profiles pr = profiles(op);
      CHECK(profile_integral(pr.x) == p.area());
      CHECK(profile_integral(pr.y) == p.area());
      CHECK(pr.x.size() <= 2);
      CHECK(pr.y.size() <= 2);
    }
  }
}

TEST_CASE("profiles match column and row sums, and rotate into each other") {
  for (const AnglePiece& p : table_pieces()) {
    const auto all = orientations(p, Mode::RotMirror);
    for (const OrientedPiece& op : all) {
      const CellSet cs = as_set(cells(op));
      const Profiles pr = profiles(op);
      CHECK(testing::expand(pr.x) == testing::column_sums(cs, op.w));
      CHECK(testing::expand(pr.y) == testing::row_sums(cs, op.h));
      // A quarter turn maps rows onto columns in reverse order.
      const OrientedPiece turned = transform_piece(op, 2);
      std::vector<int> rows = testing::expand(pr.y);
      std::reverse(rows.begin(), rows.end());
      CHECK(testing::expand(profiles(turned).x) == rows);
      CHECK(testing::expand(profiles(turned).y) == testing::expand(pr.x));
    }
  }
}

TEST_CASE("validate_layout examples") {
  SUBCASE("unit square fills the notch") {
    const Instance inst =
        make_instance({{1, 2, 2, 1}, {1, 1, 1, 1}}, 2, 2, Mode::Fixed);
    const Layout l{{{1, 0, 0, 0}, {2, 0, 0, 0}}, 2, 2};
    CHECK(validate_layout(inst, l).ok());
    CHECK(testing::layout_is_valid(inst, l));
  }
  SUBCASE("overlap names the shared cell") {
    const Instance inst =
        make_instance({{1, 1, 1, 1}, {1, 1, 1, 1}}, 2, 2, Mode::Fixed);
    const auto rep = validate_layout(inst, {{{1, 0, 0, 0}, {2, 0, 0, 0}}, 2, 2});
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == ViolationKind::Overlap);
    CHECK(rep.violations[0].cell == Cell{0, 0});
    CHECK(rep.violations[0].other_piece_id == 2);
  }
  SUBCASE("out of bounds") {
    const Instance inst = make_instance({{2, 3, 2, 3}}, 4, 4, Mode::Fixed);
    const auto rep = validate_layout(inst, {{{1, 0, 2, 0}}, 3, 3});
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].kind == ViolationKind::OutOfBounds);
  }
  SUBCASE("extent smaller than a piece edge") {
    const Instance inst = make_instance({{2, 3, 2, 3}}, 4, 4, Mode::Fixed);
    const auto rep = validate_layout(inst, {{{1, 0, 0, 0}}, 2, 2});
    bool extent = false;
    for (const Violation& v : rep.violations) {
      extent = extent || v.kind == ViolationKind::ExtentTooSmall;
    }
    CHECK(extent);
  }
  SUBCASE("rotation is illegal in fixed mode") {
    const Instance inst = make_instance({{2, 3, 2, 3}}, 4, 4, Mode::Fixed);
    const auto rep = validate_layout(inst, {{{1, 1, 0, 0}}, 3, 2});
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].kind == ViolationKind::IllegalOrientation);
  }
  SUBCASE("input errors") {
    const Instance inst = make_instance({{2, 3, 2, 3}}, 4, 4, Mode::RotMirror);
    CHECK_THROWS_AS(validate_layout(inst, {{{2, 0, 0, 0}}, 4, 4}), InputError);
    CHECK_THROWS_AS(validate_layout(inst, {{{1, 2, 0, 0}}, 4, 4}), InputError);
    CHECK_THROWS_AS(validate_layout(inst, {{}, 4, 4}), InputError);
  }
}

TEST_CASE("validate_layout agrees with the independent painter") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const Mode mode = trial % 2 ? Mode::RotMirror : Mode::Fixed;
    const Instance inst = testing::random_instance(rng, mode, 3, 3, 6);
    Layout l;
    l.end_x = std::uniform_int_distribution<int>(1, inst.max_end_x)(rng);
    l.end_y = std::uniform_int_distribution<int>(1, inst.max_end_y)(rng);
    for (const AnglePiece& p : inst.pieces) {
      const int n = static_cast<int>(orientations(p, Mode::RotMirror).size());
      const int orient =
          mode == Mode::Fixed ? 0 : std::uniform_int_distribution<int>(0, n - 1)(rng);
      l.placements.push_back({p.id, orient,
                              std::uniform_int_distribution<int>(0, 3)(rng),
                              std::uniform_int_distribution<int>(0, 3)(rng)});
    }
    CHECK(validate_layout(inst, l).ok() == testing::layout_is_valid(inst, l));
  }
}

TEST_CASE("instance construction") {
  // Exactly fills the 9 x 9 box.
  CHECK(testing::example_one().total_area() == 81);
  // Exactly fills the 10 x 10 box.
  CHECK(testing::example_two().total_area() == 100);
  CHECK_THROWS_AS(make_instance({}, 3, 3, Mode::Fixed), InputError);
  CHECK_THROWS_AS(make_instance({{1, 2, 3}}, 3, 3, Mode::Fixed), InputError);
  CHECK_THROWS_AS(make_instance({{1, 1, 1, 1}}, 0, 3, Mode::Fixed), InputError);
  CHECK(parse_mode("rot_mirror") == Mode::RotMirror);
  CHECK_THROWS_AS(parse_mode("rotate"), InputError);
}
