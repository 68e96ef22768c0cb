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

#include "anglepack/oracle.h"

#include <bit>

namespace anglepack {

Occupancy::Occupancy(int width, int height)
    : width_(width),
      height_(height),
      bits_((static_cast<size_t>(width) * height + 63) / 64, 0) {}

bool Occupancy::test(Cell c) const {
  const int i = index(c);
  return (bits_[i >> 6] >> (i & 63)) & 1;
}

void Occupancy::set(Cell c) {
  const int i = index(c);
  bits_[i >> 6] |= uint64_t{1} << (i & 63);
}

void Occupancy::reset(Cell c) {
  const int i = index(c);
  bits_[i >> 6] &= ~(uint64_t{1} << (i & 63));
}

int Occupancy::count() const {
  int n = 0;
  for (uint64_t w : bits_) n += std::popcount(w);
  return n;
}

bool Occupancy::fits(const std::vector<Cell>& cells) const {
  for (const Cell& c : cells) {
    if (c.col < 0 || c.row < 0 || c.col >= width_ || c.row >= height_ ||
        test(c)) {
      return false;
    }
  }
  return true;
}

void Occupancy::place(const std::vector<Cell>& cells) {
  for (const Cell& c : cells) set(c);
}

void Occupancy::remove(const std::vector<Cell>& cells) {
  for (const Cell& c : cells) reset(c);
}

namespace {

struct Candidate {
  int orient;
  Cell origin;
  std::vector<Cell> cells;
};

class BoxSearch {
 public:
  BoxSearch(const Instance& instance, int box_w, int box_h, int64_t& attempts,
            int64_t budget)
      : instance_(instance),
        grid_(box_w, box_h),
        attempts_(attempts),
        budget_(budget) {
    const int n = static_cast<int>(instance.pieces.size());
    for (int i = 0; i < n; ++i) {
      std::vector<Candidate> list;
      for (const OrientedPiece& op :
           orientations(instance.pieces[i], instance.mode)) {
        // Symmetry cut for the first piece: x <= (X - w) / 2.
        const int x_limit =
            (i == 0 && instance.mode == Mode::RotMirror) ? (box_w - op.w) / 2
                                                         : box_w - op.w;
        for (int x = 0; x <= x_limit; ++x) {
          for (int y = 0; y + op.h <= box_h; ++y) {
            list.push_back({op.orient, {x, y}, cells(op, {x, y})});
          }
        }
      }
      candidates_.push_back(std::move(list));
    }
    chosen_.resize(n);
  }

  // True when a packing was found; throws BudgetHit when out of budget.
  bool run() { return place(0); }

  Layout layout() const {
    Layout l;
    l.end_x = grid_.width();
    l.end_y = grid_.height();
    for (size_t i = 0; i < chosen_.size(); ++i) {
      const Candidate& c = *chosen_[i];
      l.placements.push_back(
          {instance_.pieces[i].id, c.orient, c.origin.col, c.origin.row});
    }
    return l;
  }

  struct BudgetHit {};

 private:
  bool place(size_t i) {
    if (i == candidates_.size()) return true;
    for (const Candidate& c : candidates_[i]) {
      if (++attempts_ > budget_) throw BudgetHit{};
      if (!grid_.fits(c.cells)) continue;
      grid_.place(c.cells);
      chosen_[i] = &c;
      if (place(i + 1)) return true;
      grid_.remove(c.cells);
    }
    return false;
  }

  const Instance& instance_;
  Occupancy grid_;
  int64_t& attempts_;
  int64_t budget_;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<const Candidate*> chosen_;
};

}  // namespace

OracleResult brute_force_optimal(const Instance& instance,
                                 const OracleOptions& options) {
  check_instance(instance);
  OracleResult result;
  const int area = instance.total_area();
  const int mx = instance.max_end_x;
  const int my = instance.max_end_y;
  for (int sum = 2; sum <= mx + my; ++sum) {
    for (int box_w = 1; box_w <= mx; ++box_w) {
      const int box_h = sum - box_w;
      if (box_h < 1 || box_h > my) continue;
      if (box_w * box_h < area) continue;
      BoxSearch search(instance, box_w, box_h, result.attempts,
                       options.budget);
      try {
        if (search.run()) {
          result.status = OracleStatus::Optimal;
          result.objective = sum;
          result.layout = search.layout();
          return result;
        }
      } catch (const BoxSearch::BudgetHit&) {
        result.status = OracleStatus::BudgetExceeded;
        return result;
      }
    }
  }
  result.status = OracleStatus::Infeasible;
  return result;
}

}  // namespace anglepack
