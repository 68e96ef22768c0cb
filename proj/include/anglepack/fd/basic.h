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

#ifndef ANGLEPACK_FD_BASIC_H_
#define ANGLEPACK_FD_BASIC_H_

#include <span>
#include <vector>

#include "anglepack/fd/model.h"

namespace anglepack::fd {

// Bounds reasoning for sum(coeffs[i] * vars[i]) <= rhs.
bool propagate_linear_le(Store& s, std::span<const int> coeffs,
                         std::span<const VarId> vars, int rhs);

// sum(coeffs[i] * vars[i]) <= rhs.
class LinearLessEqual : public Propagator {
 public:
  LinearLessEqual(std::vector<int> coeffs, std::vector<VarId> vars, int rhs);

  std::string_view name() const override { return "linear_le"; }
  std::vector<VarId> scope() const override { return vars_; }
  bool propagate(Store& s) override;

 private:
  std::vector<int> coeffs_;
  std::vector<VarId> vars_;
  int rhs_;
};

// x >= c, posted as -x <= -c.
void post_at_least(Model& m, VarId x, int c);
// x <= c.
void post_at_most(Model& m, VarId x, int c);

// x * y >= k for positive x and y. Bounds reasoning only.
class ProductAtLeast : public Propagator {
 public:
  ProductAtLeast(VarId x, VarId y, int k);

  std::string_view name() const override { return "product_ge"; }
  std::vector<VarId> scope() const override { return {x_, y_}; }
  bool propagate(Store& s) override;

 private:
  VarId x_;
  VarId y_;
  int k_;
};

// Extensional constraint: the vars take one of the listed tuples.
// Generalized arc consistency by support scanning.
class Table : public Propagator {
 public:
  Table(std::vector<VarId> vars, std::vector<std::vector<int>> tuples);

  std::string_view name() const override { return "table"; }
  std::vector<VarId> scope() const override { return vars_; }
  bool propagate(Store& s) override;

 private:
  std::vector<VarId> vars_;
  std::vector<std::vector<int>> tuples_;
};

}  // namespace anglepack::fd

#endif  // ANGLEPACK_FD_BASIC_H_
