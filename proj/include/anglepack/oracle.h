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

// Exhaustive optimal packer over explicit cell grids. It shares nothing with
// the constraint models beyond geometry::orientations and geometry::cells.

#ifndef ANGLEPACK_ORACLE_H_
#define ANGLEPACK_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "anglepack/geometry.h"

namespace anglepack {

// Occupied unit cells of a width x height grid.
class Occupancy {
 public:
  Occupancy(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  bool test(Cell c) const;
  void set(Cell c);
  void reset(Cell c);
  int count() const;

  // True when every cell is inside the grid and free.
  bool fits(const std::vector<Cell>& cells) const;
  void place(const std::vector<Cell>& cells);
  void remove(const std::vector<Cell>& cells);

 private:
  int index(Cell c) const { return c.row * width_ + c.col; }

  int width_;
  int height_;
  std::vector<uint64_t> bits_;
};

struct OracleOptions {
  // Elementary placement attempts before giving up.
  int64_t budget = 100'000'000;
};

enum class OracleStatus { Optimal, Infeasible, BudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::Infeasible;
  std::optional<int> objective;
  std::optional<Layout> layout;
  int64_t attempts = 0;
};

// Tries boxes (X, Y) by ascending X + Y, ties by ascending X, skipping boxes
// smaller in area than the pieces. Each box is searched depth first, pieces
// in input order, every legal orientation and origin. The first feasible box
// is optimal. In rotation mode the first piece is kept in the left half of
// the box, which the mirror symmetry makes safe.
OracleResult brute_force_optimal(const Instance& instance,
                                 const OracleOptions& options = {});

}  // namespace anglepack

#endif  // ANGLEPACK_ORACLE_H_
