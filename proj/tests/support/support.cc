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

#include "support.h"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>

#include "anglepack/constraints.h"

namespace anglepack::testing {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

// Variable whose domain is a random sub-interval of [lo, hi] with at most
// `max_size` values.
fd::VarId random_var(fd::Model& m, std::mt19937_64& rng, int lo, int hi,
                     int max_size) {
  const int size = uniform(rng, 1, std::min(max_size, hi - lo + 1));
  const int start = uniform(rng, lo, hi - size + 1);
  return m.add_var(start, start + size - 1);
}

int64_t product_size(const fd::Model& m) {
  int64_t p = 1;
  for (int i = 0; i < m.num_vars(); ++i) {
    p *= m.store()[fd::VarId{i}].size();
    if (p > INT64_MAX / 64) return INT64_MAX / 64;
  }
  return p;
}

constexpr int64_t kMicroLimit = 30'000;

}  // namespace

Instance example_one() { return make_instance(kTable1, 9, 9, Mode::Fixed); }
Instance example_two() {
  return make_instance(kTable2, 10, 10, Mode::RotMirror);
}

CellSet raster(int a, int b, int c, int d) {
  const int w = std::max(a, c);
  const int h = std::max(b, d);
  const int nw = std::abs(c - a);
  const int nh = std::abs(b - d);
  const bool notch = nw > 0 && nh > 0;
  const bool bottom = c > a;
  const bool left = b > d;
  CellSet out;
  for (int col = 0; col < w; ++col) {
    for (int row = 0; row < h; ++row) {
      const bool in_cols = left ? col < nw : col >= w - nw;
      const bool in_rows = bottom ? row < nh : row >= h - nh;
      if (notch && in_cols && in_rows) continue;
      out.insert({col, row});
    }
  }
  return out;
}

std::pair<int, int> extent(const CellSet& cells) {
  int w = 0, h = 0;
  for (const auto& [c, r] : cells) {
    w = std::max(w, c + 1);
    h = std::max(h, r + 1);
  }
  return {w, h};
}

CellSet transform_cells(const CellSet& cells, int t) {
  CellSet cur = cells;
  auto [w, h] = extent(cur);
  if (t % 2 == 1) {
    CellSet next;
    for (const auto& [c, r] : cur) next.insert({w - 1 - c, r});
    cur = std::move(next);
  }
  for (int q = 0; q < t / 2; ++q) {
    CellSet next;
    for (const auto& [c, r] : cur) next.insert({h - 1 - r, c});
    cur = std::move(next);
    std::swap(w, h);
  }
  return cur;
}

std::vector<int> column_sums(const CellSet& cells, int width) {
  std::vector<int> out(width, 0);
  for (const auto& [c, r] : cells) ++out[c];
  return out;
}

std::vector<int> row_sums(const CellSet& cells, int height) {
  std::vector<int> out(height, 0);
  for (const auto& [c, r] : cells) ++out[r];
  return out;
}

std::vector<int> expand(const StepProfile& p) {
  std::vector<int> out;
  for (const ProfilePart& part : p) {
    for (int i = 0; i < part.dur; ++i) out.push_back(std::max(part.start, part.end));
  }
  return out;
}

bool layout_is_valid(const Instance& instance, const Layout& layout) {
  if (layout.placements.size() != instance.pieces.size()) return false;
  std::set<int> ids;
  CellSet used;
  for (const Placement& p : layout.placements) {
    if (p.piece_id < 1 || p.piece_id > static_cast<int>(instance.pieces.size()) ||
        !ids.insert(p.piece_id).second) {
      return false;
    }
    const AnglePiece& piece = instance.pieces[p.piece_id - 1];
    const CellSet base = raster(piece.a, piece.b, piece.c, piece.d);
    std::vector<CellSet> distinct;
    for (int t = 0; t < (instance.mode == Mode::Fixed ? 1 : 8); ++t) {
      CellSet cs = transform_cells(base, t);
      if (std::find(distinct.begin(), distinct.end(), cs) == distinct.end()) {
        distinct.push_back(std::move(cs));
      }
    }
    if (p.orient < 0 || p.orient >= static_cast<int>(distinct.size())) {
      return false;
    }
    for (const auto& [c, r] : distinct[p.orient]) {
      const int col = c + p.x;
      const int row = r + p.y;
      if (col < 0 || row < 0 || col >= layout.end_x || row >= layout.end_y) {
        return false;
      }
      if (!used.insert({col, row}).second) return false;
    }
  }
  return true;
}

bool diffn_holds(const std::vector<RectVal>& rects,
                 const std::pair<int, int>* extents) {
  if (extents) {
    for (const RectVal& r : rects) {
      if (r.x < 0 || r.y < 0 || r.x + r.w > extents->first ||
          r.y + r.h > extents->second) {
        return false;
      }
    }
  }
  CellSet used;
  for (const RectVal& r : rects) {
    for (int i = 0; i < r.w; ++i) {
      for (int j = 0; j < r.h; ++j) {
        if (!used.insert({r.x + i, r.y + j}).second) return false;
      }
    }
  }
  return true;
}

bool cumulative_holds(const std::vector<TaskVal>& tasks, int cap, int end) {
  std::map<int, int> load;
  for (const TaskVal& t : tasks) {
    if (t.origin + t.dur > end) return false;
    for (int u = t.origin; u < t.origin + t.dur; ++u) load[u] += t.height;
  }
  for (const auto& [u, h] : load) {
    if (h > cap) return false;
  }
  return true;
}

bool trapezoid_holds(const std::vector<TrapVal>& tasks, int cap, int end) {
  std::map<int, int> load;
  for (const TrapVal& t : tasks) {
    int u = t.origin;
    for (const PartVal& p : t.parts) {
      for (int i = 0; i < p.dur; ++i) load[u++] += std::max(p.start, p.end);
    }
    if (u > end) return false;
  }
  for (const auto& [u, h] : load) {
    if (h > cap) return false;
  }
  return true;
}

ContractReport check_contract(fd::Model& model, const Holds& holds,
                              int64_t limit) {
  ContractReport rep;
  const int n = model.num_vars();
  std::vector<std::vector<int>> doms(n);
  int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    doms[i] = model.store()[fd::VarId{i}].values();
    total *= static_cast<int64_t>(doms[i].size());
    if (total > limit) {
      rep.first_problem = "model too large to enumerate";
      rep.check_mismatches = 1;
      return rep;
    }
  }

  std::vector<std::set<int>> supported(n);
  std::vector<size_t> digit(n, 0);
  Assignment a(n);
  for (int64_t k = 0; k < total; ++k) {
    for (int i = 0; i < n; ++i) a[i] = doms[i][digit[i]];
    ++rep.assignments;
    const bool ok = holds(a);
    if (ok) {
      ++rep.solutions;
      for (int i = 0; i < n; ++i) supported[i].insert(a[i]);
    }
    fd::Store s = model.store();
    bool assigned = true;
    for (int i = 0; i < n && assigned; ++i) assigned = s.assign(fd::VarId{i}, a[i]);
    const bool stable =
        assigned && model.propagate(s, true) == fd::PropStatus::Stable;
    if (stable != ok) {
      if (rep.check_mismatches++ == 0) {
        std::ostringstream os;
        os << "fixed assignment [";
        for (int i = 0; i < n; ++i) os << (i ? "," : "") << a[i];
        os << "] semantics " << ok << " propagation " << stable;
        rep.first_problem = os.str();
      }
    }
    for (int i = 0; i < n; ++i) {
      if (++digit[i] < doms[i].size()) break;
      digit[i] = 0;
    }
  }

  fd::Store root = model.store();
  if (model.propagate(root, true) == fd::PropStatus::Failed) {
    if (rep.solutions > 0) {
      rep.root_failed_with_solutions = true;
      rep.lost_values = 1;
      if (rep.first_problem.empty()) rep.first_problem = "root failed";
    }
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    for (int v : supported[i]) {
      if (!root.contains(fd::VarId{i}, v)) {
        if (rep.lost_values++ == 0 && rep.first_problem.empty()) {
          rep.first_problem = "var " + std::to_string(i) + " lost value " +
                              std::to_string(v);
        }
      }
    }
  }
  return rep;
}

MicroCase random_diffn_case(std::mt19937_64& rng) {
  for (;;) {
    auto m = std::make_unique<fd::Model>();
    const int n = uniform(rng, 2, 3);
    std::vector<cp::RectView> rects;
    for (int i = 0; i < n; ++i) {
      rects.push_back({random_var(*m, rng, 0, 4, 3), random_var(*m, rng, 0, 4, 3),
                       random_var(*m, rng, 0, 3, 2), random_var(*m, rng, 0, 3, 2)});
    }
    std::optional<std::pair<fd::VarId, fd::VarId>> ext;
    if (coin(rng)) {
      ext = std::pair{random_var(*m, rng, 1, 6, 3), random_var(*m, rng, 1, 6, 3)};
    }
    if (product_size(*m) > kMicroLimit) continue;
    cp::post_diffn(*m, rects, ext);
    Holds holds = [rects, ext](const Assignment& a) {
      std::vector<RectVal> vals;
      for (const cp::RectView& r : rects) {
        vals.push_back({a[r.x.index], a[r.y.index], a[r.w.index], a[r.h.index]});
      }
      if (!ext) return diffn_holds(vals, nullptr);
      const std::pair<int, int> e{a[ext->first.index], a[ext->second.index]};
      return diffn_holds(vals, &e);
    };
    return {"diffn", std::move(m), std::move(holds)};
  }
}

MicroCase random_cumulative_case(std::mt19937_64& rng) {
  for (;;) {
    auto m = std::make_unique<fd::Model>();
    const int n = uniform(rng, 1, 3);
    std::vector<cp::CumTask> tasks;
    for (int i = 0; i < n; ++i) {
      tasks.push_back({random_var(*m, rng, 0, 4, 3), random_var(*m, rng, 0, 3, 2),
                       random_var(*m, rng, 0, 3, 2)});
    }
    const fd::VarId cap = random_var(*m, rng, 0, 4, 3);
    const fd::VarId end = random_var(*m, rng, 0, 8, 4);
    if (product_size(*m) > kMicroLimit) continue;
    cp::post_cumulative(*m, tasks, cap, end);
    Holds holds = [tasks, cap, end](const Assignment& a) {
      std::vector<TaskVal> vals;
      for (const cp::CumTask& t : tasks) {
        vals.push_back({a[t.origin.index], a[t.dur.index], a[t.height.index]});
      }
      return cumulative_holds(vals, a[cap.index], a[end.index]);
    };
    return {"cumulative", std::move(m), std::move(holds)};
  }
}

MicroCase random_trapezoid_case(std::mt19937_64& rng) {
  for (;;) {
    auto m = std::make_unique<fd::Model>();
    const int n = uniform(rng, 1, 3);
    std::vector<cp::TrapTask> tasks;
    for (int i = 0; i < n; ++i) {
      cp::TrapTask t{random_var(*m, rng, 0, 4, 3), {}};
      const int parts = uniform(rng, 1, 2);
      for (int k = 0; k < parts; ++k) {
        const fd::VarId start = random_var(*m, rng, 0, 3, 2);
        const fd::VarId stop = coin(rng, 0.7) ? start : random_var(*m, rng, 0, 3, 2);
        t.parts.push_back({random_var(*m, rng, 1, 3, 2), start, stop});
      }
      tasks.push_back(std::move(t));
    }
    const fd::VarId cap = random_var(*m, rng, 1, 5, 3);
    const fd::VarId end = random_var(*m, rng, 1, 9, 4);
    if (product_size(*m) > kMicroLimit) continue;
    cp::post_trapezoid_cumulative(*m, tasks, cap, end);
    Holds holds = [tasks, cap, end](const Assignment& a) {
      std::vector<TrapVal> vals;
      for (const cp::TrapTask& t : tasks) {
        TrapVal v{a[t.origin.index], {}};
        for (const cp::TrapPart& p : t.parts) {
          v.parts.push_back({a[p.dur.index], a[p.start.index], a[p.end.index]});
        }
        vals.push_back(std::move(v));
      }
      return trapezoid_holds(vals, a[cap.index], a[end.index]);
    };
    return {"trapezoid_cumulative", std::move(m), std::move(holds)};
  }
}

MicroCase random_link_case(std::mt19937_64& rng) {
  for (;;) {
    const AnglePiece piece{1, uniform(rng, 1, 3), uniform(rng, 1, 3),
                           uniform(rng, 1, 3), uniform(rng, 1, 3)};
    const Mode mode = coin(rng, 0.8) ? Mode::RotMirror : Mode::Fixed;
    std::vector<cp::LinkRow> rows;
    for (const OrientedPiece& op : orientations(piece, mode)) {
      rows.push_back(cp::make_link_row(op));
    }
    auto m = std::make_unique<fd::Model>();
    cp::OrientationLink link;
    link.orient = m->add_var(0, static_cast<int>(rows.size()) - 1);
    link.x = random_var(*m, rng, 0, 3, 3);
    link.y = random_var(*m, rng, 0, 3, 3);
    link.rows = rows;
    cp::LinkTargets& t = link.targets;
    if (coin(rng)) t.w = random_var(*m, rng, 1, 3, 3);
    if (coin(rng)) t.h = random_var(*m, rng, 1, 3, 3);
    if (coin(rng)) t.end_x = random_var(*m, rng, 1, 6, 4);
    if (coin(rng)) t.end_y = random_var(*m, rng, 1, 6, 4);
    if (coin(rng, 0.4)) {
      for (size_t j = 0; j < rows[0].rects.size(); ++j) {
        cp::RectView r{cp::kNoVar, cp::kNoVar, cp::kNoVar, cp::kNoVar};
        if (coin(rng)) r.x = random_var(*m, rng, 0, 5, 3);
        if (coin(rng)) r.w = random_var(*m, rng, 1, 3, 2);
        t.rects.push_back(r);
      }
    }
    if (coin(rng, 0.4)) {
      for (size_t j = 0; j < rows[0].x_parts.size(); ++j) {
        t.x_parts.push_back({random_var(*m, rng, 1, 3, 2), cp::kNoVar, cp::kNoVar});
      }
    }
    bool uniform_shape = true;
    for (const cp::LinkRow& r : rows) {
      uniform_shape = uniform_shape && r.rects.size() == rows[0].rects.size() &&
                      r.x_parts.size() == rows[0].x_parts.size();
    }
    if (!uniform_shape || product_size(*m) > kMicroLimit) continue;
    cp::post_orientation_link(*m, link);
    Holds holds = [link](const Assignment& a) {
      const int o = a[link.orient.index];
      if (o < 0 || o >= static_cast<int>(link.rows.size())) return false;
      const cp::LinkRow& row = link.rows[o];
      const cp::LinkTargets& t = link.targets;
      const int x = a[link.x.index];
      const int y = a[link.y.index];
      auto eq = [&](fd::VarId v, int want) {
        return v.index < 0 || a[v.index] == want;
      };
      bool ok = eq(t.w, row.w) && eq(t.h, row.h) && eq(t.end_x, x + row.w) &&
                eq(t.end_y, y + row.h);
      for (size_t j = 0; j < t.rects.size(); ++j) {
        ok = ok && eq(t.rects[j].x, x + row.rects[j].x) &&
             eq(t.rects[j].w, row.rects[j].w);
      }
      for (size_t j = 0; j < t.x_parts.size(); ++j) {
        ok = ok && eq(t.x_parts[j].dur, row.x_parts[j].dur);
      }
      return ok;
    };
    return {"orientation_link", std::move(m), std::move(holds)};
  }
}

Instance random_instance(std::mt19937_64& rng, Mode mode, int max_pieces,
                         int max_dim, int max_cap) {
  const int n = uniform(rng, 1, max_pieces);
  std::vector<std::vector<int>> sizes;
  for (int i = 0; i < n; ++i) {
    sizes.push_back({uniform(rng, 1, max_dim), uniform(rng, 1, max_dim),
                     uniform(rng, 1, max_dim), uniform(rng, 1, max_dim)});
  }
  const int cap_x = uniform(rng, std::min(4, max_cap), max_cap);
  const int cap_y = uniform(rng, std::min(4, max_cap), max_cap);
  return make_instance(sizes, cap_x, cap_y, mode);
}

}  // namespace anglepack::testing
