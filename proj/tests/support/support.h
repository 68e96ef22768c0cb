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

// Test-side reference implementations. Nothing here calls the propagators or
// the geometry decomposition; they restate the declarative semantics
// directly so the library can be checked against them.

#ifndef ANGLEPACK_TESTS_SUPPORT_H_
#define ANGLEPACK_TESTS_SUPPORT_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "anglepack/fd/model.h"
#include "anglepack/geometry.h"

namespace anglepack::testing {

// Frozen oracle results for the two worked examples (brute_force_optimal,
// recomputed by the acceptance suite).
inline constexpr int kExampleIOptimum = 18;
inline constexpr int kExampleIIOptimum = 20;

inline const std::vector<std::vector<int>> kTable1 = {
    {2, 4, 3, 1}, {2, 2, 1, 3}, {1, 3, 3, 2}, {2, 1, 4, 3}, {1, 7, 2, 2},
    {1, 2, 5, 5}, {6, 2, 2, 3}, {4, 2, 2, 1}, {3, 1, 1, 4}, {3, 2, 1, 1}};
inline const std::vector<std::vector<int>> kTable2 = {
    {3, 7, 7, 2}, {2, 10, 3, 7}, {2, 5, 4, 3}, {3, 8, 5, 2}};

Instance example_one();
Instance example_two();

// ---- geometry reference -------------------------------------------------

using CellSet = std::set<std::pair<int, int>>;  // (col, row)

// Cells of [a,b,c,d] in its identity orientation: the max(a,c) x max(b,d)
// box minus the notch. c > a puts the notch at the bottom, b > d on the left.
CellSet raster(int a, int b, int c, int d);

// Mirror x first (when t is odd), then t / 2 counter-clockwise quarter
// turns, re-anchored at (0, 0).
CellSet transform_cells(const CellSet& cells, int t);

std::pair<int, int> extent(const CellSet& cells);  // (width, height)

// Occupied count per column / per row.
std::vector<int> column_sums(const CellSet& cells, int width);
std::vector<int> row_sums(const CellSet& cells, int height);

// Unit-resolution expansion of a step profile.
std::vector<int> expand(const StepProfile& p);

// Independent layout check by painting cells of each placement, with the
// orientation taken from the distinct transforms in order.
bool layout_is_valid(const Instance& instance, const Layout& layout);

// ---- constraint semantics ----------------------------------------------

struct RectVal {
  int x, y, w, h;
};
bool diffn_holds(const std::vector<RectVal>& rects,
                 const std::pair<int, int>* extents);

struct TaskVal {
  int origin, dur, height;
};
bool cumulative_holds(const std::vector<TaskVal>& tasks, int cap, int end);

struct PartVal {
  int dur, start, end;
};
struct TrapVal {
  int origin;
  std::vector<PartVal> parts;
};
bool trapezoid_holds(const std::vector<TrapVal>& tasks, int cap, int end);

// ---- exhaustive checking of a posted model ------------------------------

using Assignment = std::vector<int>;
using Holds = std::function<bool(const Assignment&)>;

struct ContractReport {
  int64_t assignments = 0;
  int64_t solutions = 0;
  int lost_values = 0;         // solution values pruned by propagate
  int check_mismatches = 0;    // fixed-assignment verdict != semantics
  bool root_failed_with_solutions = false;
  std::string first_problem;
};

// Enumerates the product of the root domains (refuses above `limit`).
// Soundness: every value used by a solution survives root propagation.
// Checking-completeness: for every full assignment, propagation fails iff
// `holds` is false.
ContractReport check_contract(fd::Model& model, const Holds& holds,
                              int64_t limit = 1'000'000);

// A small posted model paired with its semantics.
struct MicroCase {
  std::string kind;
  std::unique_ptr<fd::Model> model;
  Holds holds;
};

MicroCase random_diffn_case(std::mt19937_64& rng);
MicroCase random_cumulative_case(std::mt19937_64& rng);
MicroCase random_trapezoid_case(std::mt19937_64& rng);
MicroCase random_link_case(std::mt19937_64& rng);

// Up to `max_pieces` pieces with sizes in 1..max_dim; caps max_cap x max_cap.
Instance random_instance(std::mt19937_64& rng, Mode mode, int max_pieces = 4,
                         int max_dim = 4, int max_cap = 8);

}  // namespace anglepack::testing

#endif  // ANGLEPACK_TESTS_SUPPORT_H_
