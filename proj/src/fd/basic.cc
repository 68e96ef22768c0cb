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

#include "anglepack/fd/basic.h"

#include <climits>
#include <cstdint>

#include "anglepack/geometry.h"

namespace anglepack::fd {
namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

int clamp_int(int64_t v) {
  if (v > INT_MAX) return INT_MAX;
  if (v < INT_MIN) return INT_MIN;
  return static_cast<int>(v);
}

}  // namespace

bool propagate_linear_le(Store& s, std::span<const int> coeffs,
                         std::span<const VarId> vars, int rhs) {
  int64_t min_sum = 0;
  for (size_t i = 0; i < vars.size(); ++i) {
    const int64_t a = coeffs[i];
    min_sum += a > 0 ? a * s.min(vars[i]) : a * s.max(vars[i]);
  }
  if (min_sum > rhs) return false;
  for (size_t i = 0; i < vars.size(); ++i) {
    const int64_t a = coeffs[i];
    if (a == 0) continue;
    const int64_t own = a > 0 ? a * s.min(vars[i]) : a * s.max(vars[i]);
    const int64_t slack = static_cast<int64_t>(rhs) - (min_sum - own);
    if (a > 0) {
      if (!s.set_max(vars[i], clamp_int(floor_div(slack, a)))) return false;
    } else {
      if (!s.set_min(vars[i], clamp_int(ceil_div(slack, a)))) return false;
    }
  }
  return true;
}

LinearLessEqual::LinearLessEqual(std::vector<int> coeffs,
                                 std::vector<VarId> vars, int rhs)
    : coeffs_(std::move(coeffs)), vars_(std::move(vars)), rhs_(rhs) {
  if (coeffs_.size() != vars_.size()) {
    throw InputError("linear_le: coefficient/variable count mismatch");
  }
}

bool LinearLessEqual::propagate(Store& s) {
  return propagate_linear_le(s, coeffs_, vars_, rhs_);
}

void post_at_least(Model& m, VarId x, int c) {
  m.emplace<LinearLessEqual>(std::vector<int>{-1}, std::vector<VarId>{x}, -c);
}

void post_at_most(Model& m, VarId x, int c) {
  m.emplace<LinearLessEqual>(std::vector<int>{1}, std::vector<VarId>{x}, c);
}

ProductAtLeast::ProductAtLeast(VarId x, VarId y, int k)
    : x_(x), y_(y), k_(k) {}

bool ProductAtLeast::propagate(Store& s) {
  if (k_ <= 0) return true;
  if (s.max(x_) <= 0 || s.max(y_) <= 0) return false;
  const int64_t k = k_;
  const int64_t x_max = s.max(x_);
  const int64_t y_max = s.max(y_);
  if (x_max * y_max < k) return false;
  return s.set_min(x_, static_cast<int>((k + y_max - 1) / y_max)) &&
         s.set_min(y_, static_cast<int>((k + x_max - 1) / x_max));
}

Table::Table(std::vector<VarId> vars, std::vector<std::vector<int>> tuples)
    : vars_(std::move(vars)), tuples_(std::move(tuples)) {
  for (const auto& t : tuples_) {
    if (t.size() != vars_.size()) throw InputError("table: tuple arity mismatch");
  }
}

bool Table::propagate(Store& s) {
  const size_t n = vars_.size();
  std::vector<std::vector<int>> supported(n);
  for (const auto& t : tuples_) {
    bool alive = true;
    for (size_t i = 0; i < n && alive; ++i) alive = s.contains(vars_[i], t[i]);
    if (!alive) continue;
    for (size_t i = 0; i < n; ++i) supported[i].push_back(t[i]);
  }
  if (n > 0 && supported[0].empty()) return false;
  for (size_t i = 0; i < n; ++i) {
    for (int v : s[vars_[i]].values()) {
      bool found = false;
      for (int u : supported[i]) {
        if (u == v) {
          found = true;
          break;
        }
      }
      if (!found && !s.remove(vars_[i], v)) return false;
    }
  }
  return true;
}

}  // namespace anglepack::fd
