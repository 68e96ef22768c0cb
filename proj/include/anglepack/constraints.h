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

// Global constraints used by the packing models.
//
// Constant sizes are passed as fixed variables (Model::add_constant), so every
// field below is a VarId.

#ifndef ANGLEPACK_CONSTRAINTS_H_
#define ANGLEPACK_CONSTRAINTS_H_

#include <optional>
#include <utility>
#include <vector>

#include "anglepack/fd/model.h"
#include "anglepack/geometry.h"

namespace anglepack::cp {

using fd::Model;
using fd::Store;
using fd::VarId;

// Optional variable slot; index -1 means "not bound".
inline constexpr VarId kNoVar{};

struct RectView {
  VarId x;
  VarId y;
  VarId w;
  VarId h;
};

struct CumTask {
  VarId origin;
  VarId dur;
  VarId height;
};

// One part of a step profile. It contributes max(start, end) on every unit it
// covers.
struct TrapPart {
  VarId dur;
  VarId start;
  VarId end;
};

// Parts are laid consecutively from `origin`.
struct TrapTask {
  VarId origin;
  std::vector<TrapPart> parts;
};

// Geometry of one orientation, as offsets from the piece origin.
struct LinkRow {
  int w = 0;
  int h = 0;
  std::vector<Rect> rects;
  StepProfile x_parts;
  StepProfile y_parts;
};

LinkRow make_link_row(const OrientedPiece& op);

// Variables tied to one piece. Any slot may be kNoVar. `rects`, `x_parts`
// and `y_parts` are either empty or sized like the matching list of every
// row.
struct LinkTargets {
  VarId w = kNoVar;
  VarId h = kNoVar;
  VarId end_x = kNoVar;  // x + w
  VarId end_y = kNoVar;  // y + h
  std::vector<RectView> rects;
  std::vector<TrapPart> x_parts;
  std::vector<TrapPart> y_parts;
};

// Row `o` of `rows` applies when `orient` == o.
struct OrientationLink {
  VarId orient;
  VarId x;
  VarId y;
  std::vector<LinkRow> rows;
  LinkTargets targets;
};

// Declarative semantics: some orientation o in dom(orient) has every target
// equal to row o's value (a constant, or the piece origin plus a constant).
// Filtering drops rows inconsistent with the target bounds, then narrows each
// target (and the origin) to the hull of what the surviving rows allow.
class OrientationLinkPropagator : public fd::Propagator {
 public:
  explicit OrientationLinkPropagator(OrientationLink link);

  std::string_view name() const override { return "orientation_link"; }
  std::vector<VarId> scope() const override;
  bool propagate(Store& s) override;

 private:
  struct Binding {
    VarId target;
    VarId base;               // kNoVar for a constant
    std::vector<int> offset;  // per row
  };

  VarId orient_;
  int rows_;
  std::vector<Binding> bindings_;
};

// Rectangle interiors pairwise disjoint; a rectangle with a zero side
// conflicts with nothing. With extents, every rectangle lies in
// [0, end_x] x [0, end_y]. Filtering is pairwise: when only one of the four
// relative positions (left, right, below, above) remains possible for a pair,
// it is enforced on bounds.
class Diffn : public fd::Propagator {
 public:
  Diffn(std::vector<RectView> rects,
        std::optional<std::pair<VarId, VarId>> extents);

  std::string_view name() const override { return "diffn"; }
  std::vector<VarId> scope() const override;
  bool propagate(Store& s) override;

 private:
  std::vector<RectView> rects_;
  std::optional<std::pair<VarId, VarId>> extents_;
};

// For every integer t, the heights of tasks with origin <= t < origin + dur
// sum to at most cap, and origin + dur <= end for every task. Filtering:
// time-table over compulsory parts plus the energy bound.
class Cumulative : public fd::Propagator {
 public:
  Cumulative(std::vector<CumTask> tasks, VarId cap, VarId end);

  std::string_view name() const override { return "cumulative"; }
  std::vector<VarId> scope() const override;
  bool propagate(Store& s) override;

 private:
  std::vector<CumTask> tasks_;
  VarId cap_;
  VarId end_;
};

// Cumulative over step-profile tasks: each part adds its height over the
// units it covers; origin + total duration <= end. Compulsory parts are
// computed per part; origins are pushed once every part duration is fixed.
class TrapezoidCumulative : public fd::Propagator {
 public:
  TrapezoidCumulative(std::vector<TrapTask> tasks, VarId cap, VarId end);

  std::string_view name() const override { return "trapezoid_cumulative"; }
  std::vector<VarId> scope() const override;
  bool propagate(Store& s) override;

 private:
  std::vector<TrapTask> tasks_;
  VarId cap_;
  VarId end_;
};

void post_orientation_link(Model& m, OrientationLink link);
void post_diffn(Model& m, std::vector<RectView> rects,
                std::optional<std::pair<VarId, VarId>> extents = std::nullopt);
void post_cumulative(Model& m, std::vector<CumTask> tasks, VarId cap,
                     VarId end);
void post_trapezoid_cumulative(Model& m, std::vector<TrapTask> tasks,
                               VarId cap, VarId end);

}  // namespace anglepack::cp

#endif  // ANGLEPACK_CONSTRAINTS_H_
