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

#include "anglepack/constraints.h"

namespace anglepack::cp {
namespace {

// Enforces "a ends before b starts" on one axis: a.pos + a.size <= b.pos.
bool before(Store& s, VarId a_pos, VarId a_size, VarId b_pos) {
  return s.set_min(b_pos, s.min(a_pos) + s.min(a_size)) &&
         s.set_max(a_pos, s.max(b_pos) - s.min(a_size)) &&
         s.set_max(a_size, s.max(b_pos) - s.min(a_pos));
}

bool can_precede(const Store& s, VarId a_pos, VarId a_size, VarId b_pos) {
  return s.min(a_pos) + s.min(a_size) <= s.max(b_pos);
}

// x + w <= end, x >= 0.
bool contain(Store& s, VarId pos, VarId size, VarId end) {
  return s.set_min(pos, 0) && s.set_max(pos, s.max(end) - s.min(size)) &&
         s.set_max(size, s.max(end) - s.min(pos)) &&
         s.set_min(end, s.min(pos) + s.min(size));
}

}  // namespace

Diffn::Diffn(std::vector<RectView> rects,
             std::optional<std::pair<VarId, VarId>> extents)
    : rects_(std::move(rects)), extents_(extents) {
  if (rects_.empty()) throw InputError("diffn: needs at least one rectangle");
}

std::vector<VarId> Diffn::scope() const {
  std::vector<VarId> out;
  for (const RectView& r : rects_) {
    out.insert(out.end(), {r.x, r.y, r.w, r.h});
  }
  if (extents_) out.insert(out.end(), {extents_->first, extents_->second});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Diffn::propagate(Store& s) {
  if (extents_) {
    for (const RectView& r : rects_) {
      if (!contain(s, r.x, r.w, extents_->first) ||
          !contain(s, r.y, r.h, extents_->second)) {
        return false;
      }
    }
  }
  for (size_t i = 0; i < rects_.size(); ++i) {
    for (size_t j = i + 1; j < rects_.size(); ++j) {
      const RectView& a = rects_[i];
      const RectView& b = rects_[j];
      if (s.min(a.w) == 0 || s.min(a.h) == 0 || s.min(b.w) == 0 ||
          s.min(b.h) == 0) {
        continue;  // may still degenerate to a zero side
      }
      const bool left = can_precede(s, a.x, a.w, b.x);
      const bool right = can_precede(s, b.x, b.w, a.x);
      const bool below = can_precede(s, a.y, a.h, b.y);
      const bool above = can_precede(s, b.y, b.h, a.y);
      const int options = left + right + below + above;
      if (options == 0) return false;
      if (options > 1) continue;
      bool ok = true;
      if (left) ok = before(s, a.x, a.w, b.x);
      if (right) ok = before(s, b.x, b.w, a.x);
      if (below) ok = before(s, a.y, a.h, b.y);
      if (above) ok = before(s, b.y, b.h, a.y);
      if (!ok) return false;
    }
  }
  return true;
}

void post_diffn(Model& m, std::vector<RectView> rects,
                std::optional<std::pair<VarId, VarId>> extents) {
  m.emplace<Diffn>(std::move(rects), extents);
}

}  // namespace anglepack::cp
