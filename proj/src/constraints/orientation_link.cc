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
#include <climits>

#include "anglepack/constraints.h"

namespace anglepack::cp {

LinkRow make_link_row(const OrientedPiece& op) {
  Profiles p = profiles(op);
  return {op.w, op.h, op.rects, std::move(p.x), std::move(p.y)};
}

OrientationLinkPropagator::OrientationLinkPropagator(OrientationLink link)
    : orient_(link.orient), rows_(static_cast<int>(link.rows.size())) {
  if (link.rows.empty()) throw InputError("orientation_link: no rows");
  const LinkTargets& t = link.targets;
  for (const LinkRow& r : link.rows) {
    // An empty target list leaves that group unbound.
    auto differs = [](size_t targets, size_t row) {
      return targets != 0 && targets != row;
    };
    if (differs(t.rects.size(), r.rects.size()) ||
        differs(t.x_parts.size(), r.x_parts.size()) ||
        differs(t.y_parts.size(), r.y_parts.size())) {
      throw InputError("orientation_link: row shape differs from targets");
    }
  }

  auto bind = [&](VarId target, VarId base, auto&& offset_of) {
    if (target.index < 0) return;
    Binding b{target, base, {}};
    for (const LinkRow& r : link.rows) b.offset.push_back(offset_of(r));
    bindings_.push_back(std::move(b));
  };
  bind(t.w, kNoVar, [](const LinkRow& r) { return r.w; });
  bind(t.h, kNoVar, [](const LinkRow& r) { return r.h; });
  bind(t.end_x, link.x, [](const LinkRow& r) { return r.w; });
  bind(t.end_y, link.y, [](const LinkRow& r) { return r.h; });
  for (size_t j = 0; j < t.rects.size(); ++j) {
    bind(t.rects[j].x, link.x, [j](const LinkRow& r) { return r.rects[j].x; });
    bind(t.rects[j].y, link.y, [j](const LinkRow& r) { return r.rects[j].y; });
    bind(t.rects[j].w, kNoVar, [j](const LinkRow& r) { return r.rects[j].w; });
    bind(t.rects[j].h, kNoVar, [j](const LinkRow& r) { return r.rects[j].h; });
  }
  auto bind_parts = [&](const std::vector<TrapPart>& parts, bool x_axis) {
    for (size_t i = 0; i < parts.size(); ++i) {
      auto part = [i, x_axis](const LinkRow& r) -> const ProfilePart& {
        return x_axis ? r.x_parts[i] : r.y_parts[i];
      };
      bind(parts[i].dur, kNoVar, [&](const LinkRow& r) { return part(r).dur; });
      bind(parts[i].start, kNoVar,
           [&](const LinkRow& r) { return part(r).start; });
      bind(parts[i].end, kNoVar, [&](const LinkRow& r) { return part(r).end; });
    }
  };
  bind_parts(t.x_parts, true);
  bind_parts(t.y_parts, false);
}

std::vector<VarId> OrientationLinkPropagator::scope() const {
  std::vector<VarId> out{orient_};
  for (const Binding& b : bindings_) {
    out.push_back(b.target);
    if (b.base.index >= 0) out.push_back(b.base);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool OrientationLinkPropagator::propagate(Store& s) {
  for (int o : s[orient_].values()) {
    bool ok = o >= 0 && o < rows_;
    for (size_t k = 0; ok && k < bindings_.size(); ++k) {
      const Binding& b = bindings_[k];
      const int c = b.offset[o];
      if (b.base.index < 0) {
        ok = s.contains(b.target, c);
      } else {
        ok = std::max(s.min(b.target), s.min(b.base) + c) <=
             std::min(s.max(b.target), s.max(b.base) + c);
      }
    }
    if (!ok && !s.remove(orient_, o)) return false;
  }

  const std::vector<int> rows = s[orient_].values();
  for (const Binding& b : bindings_) {
    if (b.base.index < 0) {
      std::vector<int> allowed;
      for (int o : rows) allowed.push_back(b.offset[o]);
      std::sort(allowed.begin(), allowed.end());
      if (!s.set_min(b.target, allowed.front())) return false;
      if (!s.set_max(b.target, allowed.back())) return false;
      for (int v : s[b.target].values()) {
        if (!std::binary_search(allowed.begin(), allowed.end(), v) &&
            !s.remove(b.target, v)) {
          return false;
        }
      }
      continue;
    }
    int t_lo = INT_MAX, t_hi = INT_MIN, b_lo = INT_MAX, b_hi = INT_MIN;
    const int tmin = s.min(b.target), tmax = s.max(b.target);
    const int bmin = s.min(b.base), bmax = s.max(b.base);
    for (int o : rows) {
      const int c = b.offset[o];
      t_lo = std::min(t_lo, std::max(tmin, bmin + c));
      t_hi = std::max(t_hi, std::min(tmax, bmax + c));
      b_lo = std::min(b_lo, std::max(bmin, tmin - c));
      b_hi = std::max(b_hi, std::min(bmax, tmax - c));
    }
    if (!s.set_min(b.target, t_lo) || !s.set_max(b.target, t_hi) ||
        !s.set_min(b.base, b_lo) || !s.set_max(b.base, b_hi)) {
      return false;
    }
  }
  return true;
}

void post_orientation_link(Model& m, OrientationLink link) {
  m.emplace<OrientationLinkPropagator>(std::move(link));
}

}  // namespace anglepack::cp
