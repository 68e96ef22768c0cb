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

// Time-table and energy filtering for both cumulative forms.

#include <algorithm>
#include <climits>
#include <cstdint>

#include "anglepack/constraints.h"

namespace anglepack::cp {
namespace {

struct Segment {
  int start;
  int end;
  int height;
};

// One constant-height block of a task, placed `offset` after the origin.
// [cp_start, cp_end) is its compulsory part, empty when cp_start >= cp_end.
struct Block {
  int offset;
  int dur;
  int height;
  int cp_start;
  int cp_end;
};

// Sum of compulsory blocks; segments are sorted, disjoint, height > 0.
class Profile {
 public:
  void add(const Block& b) {
    if (b.cp_start < b.cp_end && b.height > 0) {
      events_.push_back({b.cp_start, b.height});
      events_.push_back({b.cp_end, -b.height});
    }
  }

  void build() {
    std::sort(events_.begin(), events_.end());
    segments_.clear();
    int level = 0;
    for (size_t i = 0; i < events_.size();) {
      const int t = events_[i].first;
      while (i < events_.size() && events_[i].first == t) {
        level += events_[i++].second;
      }
      if (level > 0 && i < events_.size()) {
        segments_.push_back({t, events_[i].first, level});
      }
    }
  }

  int max_height() const {
    int m = 0;
    for (const Segment& s : segments_) m = std::max(m, s.height);
    return m;
  }

  const std::vector<Segment>& segments() const { return segments_; }

 private:
  std::vector<std::pair<int, int>> events_;
  std::vector<Segment> segments_;
};

int own_height(const Segment& seg, const std::vector<Block>& blocks) {
  int h = 0;
  for (const Block& b : blocks) {
    if (b.cp_start <= seg.start && seg.end <= b.cp_end) h += b.height;
  }
  return h;
}

// Moves the origin bounds off every start that would push the profile above
// `cap`. `blocks` are this task's blocks, already counted in `profile`.
bool push_origin(Store& s, VarId origin, const std::vector<Block>& blocks,
                 const Profile& profile, int cap) {
  const std::vector<Segment>& segs = profile.segments();
  auto conflicts = [&](const Segment& seg, const Block& b) {
    return seg.height - own_height(seg, blocks) + b.height > cap;
  };

  int lo = s.min(origin);
  int hi = s.max(origin);
  for (bool moved = true; moved && lo <= hi;) {
    moved = false;
    for (const Block& b : blocks) {
      if (b.dur <= 0 || b.height <= 0) continue;
      const int from = lo + b.offset;
      const int to = from + b.dur;
      for (const Segment& seg : segs) {
        if (seg.end <= from) continue;
        if (seg.start >= to) break;
        if (conflicts(seg, b)) {
          lo = seg.end - b.offset;
          moved = true;
          break;
        }
      }
      if (moved) break;
    }
  }
  for (bool moved = true; moved && lo <= hi;) {
    moved = false;
    for (const Block& b : blocks) {
      if (b.dur <= 0 || b.height <= 0) continue;
      const int from = hi + b.offset;
      const int to = from + b.dur;
      for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
        if (it->start >= to) continue;
        if (it->end <= from) break;
        if (conflicts(*it, b)) {
          hi = it->start - b.offset - b.dur;
          moved = true;
          break;
        }
      }
      if (moved) break;
    }
  }
  if (lo > hi) return false;
  return s.set_min(origin, lo) && s.set_max(origin, hi);
}

// Total energy must fit in [horizon_start, end) under cap.
bool energy_bound(Store& s, int64_t energy, int horizon_start, VarId cap,
                  VarId end) {
  if (energy <= 0) return true;
  const int64_t cap_max = s.max(cap);
  const int64_t span_max = static_cast<int64_t>(s.max(end)) - horizon_start;
  if (cap_max <= 0 || span_max <= 0 || energy > cap_max * span_max) {
    return false;
  }
  const int64_t min_span = (energy + cap_max - 1) / cap_max;
  const int64_t min_cap = (energy + span_max - 1) / span_max;
  return s.set_min(end, static_cast<int>(horizon_start + min_span)) &&
         s.set_min(cap, static_cast<int>(min_cap));
}

bool profile_fits(Store& s, const Profile& profile, VarId cap) {
  return s.set_min(cap, profile.max_height());
}

void add_unique(std::vector<VarId>& out) {
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace

Cumulative::Cumulative(std::vector<CumTask> tasks, VarId cap, VarId end)
    : tasks_(std::move(tasks)), cap_(cap), end_(end) {}

std::vector<VarId> Cumulative::scope() const {
  std::vector<VarId> out{cap_, end_};
  for (const CumTask& t : tasks_) {
    out.insert(out.end(), {t.origin, t.dur, t.height});
  }
  add_unique(out);
  return out;
}

bool Cumulative::propagate(Store& s) {
  if (tasks_.empty()) return true;
  for (const CumTask& t : tasks_) {
    if (!s.set_max(t.origin, s.max(end_) - s.min(t.dur)) ||
        !s.set_max(t.dur, s.max(end_) - s.min(t.origin)) ||
        !s.set_min(end_, s.min(t.origin) + s.min(t.dur))) {
      return false;
    }
  }

  std::vector<std::vector<Block>> blocks(tasks_.size());
  Profile profile;
  int64_t energy = 0;
  int horizon_start = INT_MAX;
  for (size_t i = 0; i < tasks_.size(); ++i) {
    const CumTask& t = tasks_[i];
    const int d = s.min(t.dur);
    const int h = s.min(t.height);
    blocks[i].push_back({0, d, h, s.max(t.origin), s.min(t.origin) + d});
    profile.add(blocks[i].back());
    energy += static_cast<int64_t>(d) * h;
    horizon_start = std::min(horizon_start, s.min(t.origin));
  }
  profile.build();
  if (!profile_fits(s, profile, cap_)) return false;

  const int cap = s.max(cap_);
  for (size_t i = 0; i < tasks_.size(); ++i) {
    if (!push_origin(s, tasks_[i].origin, blocks[i], profile, cap)) {
      return false;
    }
  }
  return energy_bound(s, energy, horizon_start, cap_, end_);
}

TrapezoidCumulative::TrapezoidCumulative(std::vector<TrapTask> tasks,
                                         VarId cap, VarId end)
    : tasks_(std::move(tasks)), cap_(cap), end_(end) {}

std::vector<VarId> TrapezoidCumulative::scope() const {
  std::vector<VarId> out{cap_, end_};
  for (const TrapTask& t : tasks_) {
    out.push_back(t.origin);
    for (const TrapPart& p : t.parts) {
      out.insert(out.end(), {p.dur, p.start, p.end});
    }
  }
  add_unique(out);
  return out;
}

bool TrapezoidCumulative::propagate(Store& s) {
  if (tasks_.empty()) return true;
  for (const TrapTask& t : tasks_) {
    int total_min = 0;
    for (const TrapPart& p : t.parts) total_min += s.min(p.dur);
    if (!s.set_max(t.origin, s.max(end_) - total_min) ||
        !s.set_min(end_, s.min(t.origin) + total_min)) {
      return false;
    }
    for (const TrapPart& p : t.parts) {
      const int others = total_min - s.min(p.dur);
      if (!s.set_max(p.dur, s.max(end_) - s.min(t.origin) - others)) {
        return false;
      }
    }
  }

  std::vector<std::vector<Block>> blocks(tasks_.size());
  std::vector<bool> offsets_fixed(tasks_.size(), true);
  Profile profile;
  int64_t energy = 0;
  int horizon_start = INT_MAX;
  for (size_t i = 0; i < tasks_.size(); ++i) {
    const TrapTask& t = tasks_[i];
    int off_min = 0;
    int off_max = 0;
    for (const TrapPart& p : t.parts) {
      const int d = s.min(p.dur);
      const int h = std::max(s.min(p.start), s.min(p.end));
      blocks[i].push_back({off_min, d, h, s.max(t.origin) + off_max,
                           s.min(t.origin) + off_min + d});
      profile.add(blocks[i].back());
      energy += static_cast<int64_t>(d) * h;
      if (!s.fixed(p.dur)) offsets_fixed[i] = false;
      off_min += d;
      off_max += s.max(p.dur);
    }
    horizon_start = std::min(horizon_start, s.min(t.origin));
  }
  profile.build();
  if (!profile_fits(s, profile, cap_)) return false;

  const int cap = s.max(cap_);
  for (size_t i = 0; i < tasks_.size(); ++i) {
    if (!offsets_fixed[i]) continue;
    if (!push_origin(s, tasks_[i].origin, blocks[i], profile, cap)) {
      return false;
    }
  }
  return energy_bound(s, energy, horizon_start, cap_, end_);
}

void post_cumulative(Model& m, std::vector<CumTask> tasks, VarId cap,
                     VarId end) {
  m.emplace<Cumulative>(std::move(tasks), cap, end);
}

void post_trapezoid_cumulative(Model& m, std::vector<TrapTask> tasks,
                               VarId cap, VarId end) {
  m.emplace<TrapezoidCumulative>(std::move(tasks), cap, end);
}

}  // namespace anglepack::cp
