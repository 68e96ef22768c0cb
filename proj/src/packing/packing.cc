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

#include "anglepack/packing.h"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "anglepack/fd/basic.h"

namespace anglepack {

std::string_view to_string(Relaxation r) {
  switch (r) {
    case Relaxation::None: return "none";
    case Relaxation::Cumulative: return "cumulative";
    case Relaxation::Trapeze: return "trapeze";
    case Relaxation::Both: return "both";
  }
  return "?";
}

std::string_view to_string(CapacityBinding c) {
  return c == CapacityBinding::Tied ? "tied" : "free";
}

std::string_view to_string(Strategy s) {
  return s == Strategy::Default ? "default" : "paper";
}

Relaxation parse_relaxation(std::string_view s) {
  for (Relaxation r : {Relaxation::None, Relaxation::Cumulative,
                       Relaxation::Trapeze, Relaxation::Both}) {
    if (s == to_string(r)) return r;
  }
  throw InputError("unknown relaxation '" + std::string(s) +
                   "' (expected none, cumulative, trapeze or both)");
}

CapacityBinding parse_capacity_binding(std::string_view s) {
  if (s == "tied") return CapacityBinding::Tied;
  if (s == "free") return CapacityBinding::Free;
  throw InputError("unknown capacity binding '" + std::string(s) +
                   "' (expected tied or free)");
}

Strategy parse_strategy(std::string_view s) {
  if (s == "default") return Strategy::Default;
  if (s == "paper") return Strategy::Paper;
  throw InputError("unknown strategy '" + std::string(s) +
                   "' (expected default or paper)");
}

std::string_view to_string(OutcomeStatus s) {
  switch (s) {
    case OutcomeStatus::Optimal: return "Optimal";
    case OutcomeStatus::Feasible: return "Feasible";
    case OutcomeStatus::Infeasible: return "Infeasible";
    case OutcomeStatus::Timeout: return "Timeout";
  }
  return "?";
}

OutcomeStatus parse_outcome_status(std::string_view s) {
  for (OutcomeStatus o : {OutcomeStatus::Optimal, OutcomeStatus::Feasible,
                          OutcomeStatus::Infeasible, OutcomeStatus::Timeout}) {
    if (s == to_string(o)) return o;
  }
  throw InputError("unknown status '" + std::string(s) + "'");
}

namespace {

struct Hull {
  int lo = INT_MAX;
  int hi = INT_MIN;
  void add(int v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

// Variable whose domain is the hull of `pick(row)` over all rows.
template <class Pick>
fd::VarId hull_var(fd::Model& m, const std::vector<cp::LinkRow>& rows,
                   Pick pick, std::string name) {
  Hull hull;
  for (const cp::LinkRow& r : rows) hull.add(pick(r));
  return m.add_var(hull.lo, hull.hi, std::move(name));
}

std::vector<cp::TrapPart> part_vars(fd::Model& m,
                                    const std::vector<cp::LinkRow>& rows,
                                    bool x_axis, const std::string& prefix) {
  const auto& first = x_axis ? rows.front().x_parts : rows.front().y_parts;
  std::vector<cp::TrapPart> out;
  for (size_t i = 0; i < first.size(); ++i) {
    auto part = [&](const cp::LinkRow& r) -> const ProfilePart& {
      return x_axis ? r.x_parts[i] : r.y_parts[i];
    };
    const std::string n = prefix + std::to_string(i + 1);
    out.push_back(
        {hull_var(m, rows, [&](const auto& r) { return part(r).dur; }, n + ".dur"),
         hull_var(m, rows, [&](const auto& r) { return part(r).start; }, n + ".s"),
         hull_var(m, rows, [&](const auto& r) { return part(r).end; }, n + ".e")});
  }
  return out;
}

}  // namespace

std::unique_ptr<PackingModel> build_model(const Instance& instance,
                                          const ModelConfig& config) {
  check_instance(instance);
  auto pm = std::make_unique<PackingModel>();
  fd::Model& m = pm->model;
  const int mx = instance.max_end_x;
  const int my = instance.max_end_y;

  pm->end_x = m.add_var(1, mx, "EndX");
  pm->end_y = m.add_var(1, my, "EndY");
  if (config.capacity_binding == CapacityBinding::Tied) {
    pm->cap_x = pm->end_y;
    pm->cap_y = pm->end_x;
  } else {
    pm->cap_x = m.add_var(1, my, "High1");
    pm->cap_y = m.add_var(1, mx, "High2");
  }

  std::vector<cp::RectView> all_rects;
  for (const AnglePiece& piece : instance.pieces) {
    const std::string tag = "p" + std::to_string(piece.id);
    std::vector<cp::LinkRow> rows;
    for (const OrientedPiece& op : orientations(piece, instance.mode)) {
      rows.push_back(cp::make_link_row(op));
    }

    PieceVars pv;
    pv.x = m.add_var(0, mx - 1, tag + ".x");
    pv.y = m.add_var(0, my - 1, tag + ".y");
    pv.orient = m.add_var(0, static_cast<int>(rows.size()) - 1, tag + ".o");
    bool any_fits = false;
    for (size_t o = 0; o < rows.size(); ++o) {
      if (rows[o].w <= mx && rows[o].h <= my) {
        any_fits = true;
      } else {
        m.store().remove(pv.orient, static_cast<int>(o));
      }
    }
    if (!any_fits) {
      pm->infeasible = "piece " + std::to_string(piece.id) +
                       " fits the " + std::to_string(mx) + "x" +
                       std::to_string(my) + " limits in no orientation";
      return pm;
    }
    pv.w = hull_var(m, rows, [](const auto& r) { return r.w; }, tag + ".w");
    pv.h = hull_var(m, rows, [](const auto& r) { return r.h; }, tag + ".h");
    pv.end_x = m.add_var(1, mx, tag + ".enx");
    pv.end_y = m.add_var(1, my, tag + ".eny");
    for (size_t j = 0; j < rows.front().rects.size(); ++j) {
      const std::string n = tag + ".r" + std::to_string(j + 1);
      pv.rects.push_back(
          {m.add_var(0, mx - 1, n + ".x"), m.add_var(0, my - 1, n + ".y"),
           hull_var(m, rows, [j](const auto& r) { return r.rects[j].w; }, n + ".w"),
           hull_var(m, rows, [j](const auto& r) { return r.rects[j].h; }, n + ".h")});
    }
    pv.x_parts = part_vars(m, rows, true, tag + ".tx");
    pv.y_parts = part_vars(m, rows, false, tag + ".ty");

    cp::OrientationLink link;
    link.orient = pv.orient;
    link.x = pv.x;
    link.y = pv.y;
    link.rows = std::move(rows);
    link.targets = {pv.w, pv.h, pv.end_x, pv.end_y, pv.rects, pv.x_parts,
                    pv.y_parts};
    cp::post_orientation_link(m, std::move(link));
    ++pm->summary.links;

    m.emplace<fd::LinearLessEqual>(std::vector<int>{1, -1},
                                   std::vector<fd::VarId>{pv.end_x, pm->end_x},
                                   0);
    m.emplace<fd::LinearLessEqual>(std::vector<int>{1, -1},
                                   std::vector<fd::VarId>{pv.end_y, pm->end_y},
                                   0);
    all_rects.insert(all_rects.end(), pv.rects.begin(), pv.rects.end());
    pm->pieces.push_back(std::move(pv));
  }

  pm->summary.diffn_rects = static_cast<int>(all_rects.size());
  cp::post_diffn(m, all_rects, std::pair{pm->end_x, pm->end_y});

  const bool cumulative = config.relaxation == Relaxation::Cumulative ||
                          config.relaxation == Relaxation::Both;
  const bool trapeze = config.relaxation == Relaxation::Trapeze ||
                       config.relaxation == Relaxation::Both;
  if (cumulative) {
    std::vector<cp::CumTask> on_x;
    std::vector<cp::CumTask> on_y;
    for (const cp::RectView& r : all_rects) {
      on_x.push_back({r.x, r.w, r.h});
      on_y.push_back({r.y, r.h, r.w});
    }
    pm->summary.cumulative_tasks_x = static_cast<int>(on_x.size());
    pm->summary.cumulative_tasks_y = static_cast<int>(on_y.size());
    cp::post_cumulative(m, std::move(on_x), pm->cap_x, pm->end_x);
    cp::post_cumulative(m, std::move(on_y), pm->cap_y, pm->end_y);
  }
  if (trapeze) {
    std::vector<cp::TrapTask> on_x;
    std::vector<cp::TrapTask> on_y;
    for (const PieceVars& pv : pm->pieces) {
      on_x.push_back({pv.x, pv.x_parts});
      on_y.push_back({pv.y, pv.y_parts});
      pm->summary.trapezoid_parts_x += static_cast<int>(pv.x_parts.size());
      pm->summary.trapezoid_parts_y += static_cast<int>(pv.y_parts.size());
    }
    pm->summary.trapezoid_tasks_x = static_cast<int>(on_x.size());
    pm->summary.trapezoid_tasks_y = static_cast<int>(on_y.size());
    cp::post_trapezoid_cumulative(m, std::move(on_x), pm->cap_x, pm->end_x);
    cp::post_trapezoid_cumulative(m, std::move(on_y), pm->cap_y, pm->end_y);
  }

  // The box must hold the pieces' area whatever the relaxation.
  m.emplace<fd::ProductAtLeast>(pm->end_x, pm->end_y, instance.total_area());
  m.set_objective({pm->end_x, pm->end_y});
  return pm;
}

std::vector<fd::VarId> variable_order(const PackingModel& pm,
                                      Strategy strategy) {
  std::vector<fd::VarId> order;
  if (strategy == Strategy::Default) {
    for (const PieceVars& pv : pm.pieces) {
      order.insert(order.end(), {pv.orient, pv.x, pv.y});
    }
  } else {
    for (const PieceVars& pv : pm.pieces) order.push_back(pv.x);
    for (const PieceVars& pv : pm.pieces) order.push_back(pv.y);
    for (const PieceVars& pv : pm.pieces) order.push_back(pv.orient);
  }
  order.push_back(pm.end_x);
  order.push_back(pm.end_y);
  return order;
}

std::vector<Rect> placed_rects(const Instance& instance, const Placement& p) {
  std::vector<Rect> out = oriented_for(instance, p).rects;
  for (Rect& r : out) {
    r.x += p.x;
    r.y += p.y;
  }
  return out;
}

Outcome solve(const Instance& instance, const ModelConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::unique_ptr<PackingModel> pm = build_model(instance, config);
  Outcome out;
  auto finish = [&] {
    out.stats.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return out;
  };
  if (pm->infeasible) return finish();

  const std::vector<fd::VarId> order = variable_order(*pm, config.strategy);
  fd::SearchOptions options;
  options.time_limit = config.time_limit;
  const fd::SearchResult r = config.optimize
                                 ? fd::minimize(pm->model, order, options)
                                 : fd::label(pm->model, order, options);
  out.stats = r.stats;
  switch (r.status) {
    case fd::SearchStatus::Optimal: out.status = OutcomeStatus::Optimal; break;
    case fd::SearchStatus::Feasible: out.status = OutcomeStatus::Feasible; break;
    case fd::SearchStatus::Infeasible:
      out.status = OutcomeStatus::Infeasible;
      break;
    case fd::SearchStatus::Timeout: out.status = OutcomeStatus::Timeout; break;
  }
  if (r.values) {
    const std::vector<int>& v = *r.values;
    Layout layout;
    layout.end_x = v[pm->end_x.index];
    layout.end_y = v[pm->end_y.index];
    for (size_t i = 0; i < pm->pieces.size(); ++i) {
      const PieceVars& pv = pm->pieces[i];
      layout.placements.push_back({instance.pieces[i].id, v[pv.orient.index],
                                   v[pv.x.index], v[pv.y.index]});
    }
    const ValidationReport report = validate_layout(instance, layout);
    if (!report.ok()) {
      throw std::logic_error("solver produced an invalid layout: " +
                             report.violations.front().message);
    }
    out.objective = layout.end_x + layout.end_y;
    out.layout = std::move(layout);
  }
  return finish();
}

}  // namespace anglepack
