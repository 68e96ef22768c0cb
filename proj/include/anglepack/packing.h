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

// Constraint models for angle packing.
//
// Every piece gets an origin (x, y), an orientation variable and one
// orientation link tying the origin to its bounding box, its sub-rectangles
// and its per-axis step profiles. All sub-rectangles go into one diffn
// bounded by (EndX, EndY). The redundant relaxations add, per axis, either a
// cumulative over the sub-rectangles, a step-profile cumulative over the
// pieces, or both. The objective is EndX + EndY.

#ifndef ANGLEPACK_PACKING_H_
#define ANGLEPACK_PACKING_H_

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anglepack/constraints.h"
#include "anglepack/fd/model.h"
#include "anglepack/fd/search.h"
#include "anglepack/geometry.h"

namespace anglepack {

enum class Relaxation { None, Cumulative, Trapeze, Both };
enum class CapacityBinding { Free, Tied };
enum class Strategy { Default, Paper };

std::string_view to_string(Relaxation r);
std::string_view to_string(CapacityBinding c);
std::string_view to_string(Strategy s);
Relaxation parse_relaxation(std::string_view s);
CapacityBinding parse_capacity_binding(std::string_view s);
Strategy parse_strategy(std::string_view s);

struct ModelConfig {
  Relaxation relaxation = Relaxation::Cumulative;
  bool optimize = true;
  // Tied: the x-axis capacity is EndY and the y-axis capacity is EndX.
  // Free: separate capacity variables in 1..max_end_y / 1..max_end_x.
  CapacityBinding capacity_binding = CapacityBinding::Tied;
  std::optional<std::chrono::milliseconds> time_limit;
  Strategy strategy = Strategy::Default;
};

struct PieceVars {
  fd::VarId x;
  fd::VarId y;
  fd::VarId orient;
  fd::VarId w;
  fd::VarId h;
  fd::VarId end_x;
  fd::VarId end_y;
  std::vector<cp::RectView> rects;
  std::vector<cp::TrapPart> x_parts;
  std::vector<cp::TrapPart> y_parts;
};

struct ModelSummary {
  int links = 0;
  int diffn_rects = 0;
  int cumulative_tasks_x = 0;
  int cumulative_tasks_y = 0;
  int trapezoid_tasks_x = 0;
  int trapezoid_tasks_y = 0;
  int trapezoid_parts_x = 0;
  int trapezoid_parts_y = 0;
};

struct PackingModel {
  fd::Model model;
  fd::VarId end_x;
  fd::VarId end_y;
  fd::VarId cap_x;  // capacity of the x-axis relaxations
  fd::VarId cap_y;
  std::vector<PieceVars> pieces;
  ModelSummary summary;
  // Set when some piece fits the caps in no legal orientation.
  std::optional<std::string> infeasible;
};

std::unique_ptr<PackingModel> build_model(const Instance& instance,
                                          const ModelConfig& config);

// Default: per piece orient, x, y, in input order. Paper: every x, then
// every y, then the orientations. Both end with EndX, EndY.
std::vector<fd::VarId> variable_order(const PackingModel& pm,
                                      Strategy strategy);

enum class OutcomeStatus { Optimal, Feasible, Infeasible, Timeout };

std::string_view to_string(OutcomeStatus s);
OutcomeStatus parse_outcome_status(std::string_view s);

struct Outcome {
  OutcomeStatus status = OutcomeStatus::Infeasible;
  std::optional<Layout> layout;
  std::optional<int> objective;
  fd::SearchStats stats;
};

// Builds the model and runs labeling (optimize == false) or branch and bound.
// Returned layouts always pass validate_layout.
Outcome solve(const Instance& instance, const ModelConfig& config);

// Absolute sub-rectangles of a placement.
std::vector<Rect> placed_rects(const Instance& instance, const Placement& p);

}  // namespace anglepack

#endif  // ANGLEPACK_PACKING_H_
