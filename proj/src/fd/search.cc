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

#include "anglepack/fd/search.h"

#include <deque>

#include "anglepack/geometry.h"

namespace anglepack::fd {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Feasible: return "Feasible";
    case SearchStatus::Optimal: return "Optimal";
    case SearchStatus::Infeasible: return "Infeasible";
    case SearchStatus::Timeout: return "Timeout";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class DepthFirst {
 public:
  DepthFirst(Model& model, std::span<const VarId> order,
             const SearchOptions& options, bool optimize)
      : model_(model),
        order_(order.begin(), order.end()),
        options_(options),
        optimize_(optimize),
        start_(Clock::now()) {
    if (optimize_ && model_.objective_terms().empty()) {
      throw InputError("minimize: model has no objective");
    }
    for (VarId v : order_) {
      if (v.index < 0 || v.index >= model_.num_vars()) {
        throw InputError("search order names a variable outside the model");
      }
    }
  }

  SearchResult run() {
    const int saved_upper = model_.objective_upper();
    stores_.clear();
    stores_.push_back(model_.store());
    stores_.front().clear_changed();
    first_node_ = true;
    dive(0);
    model_.set_objective_upper(saved_upper);

    result_.stats.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        Clock::now() - start_);
    if (timed_out_) {
      result_.status = SearchStatus::Timeout;
    } else if (!result_.values) {
      result_.status = SearchStatus::Infeasible;
    } else {
      result_.status =
          optimize_ ? SearchStatus::Optimal : SearchStatus::Feasible;
    }
    model_.stats = result_.stats;
    return std::move(result_);
  }

 private:
  // Returns true when the search must stop.
  bool dive(size_t depth) {
    SearchStats& st = result_.stats;
    ++st.nodes;
    if (options_.time_limit && (st.nodes & 255) == 0 &&
        Clock::now() - start_ >= *options_.time_limit) {
      timed_out_ = true;
      return true;
    }
    {
      Store& s = stores_[depth];
      const bool all = first_node_;
      first_node_ = false;
      if (model_.propagate(s, all) == PropStatus::Failed) {
        ++st.fails;
        return false;
      }
    }
    const std::optional<VarId> var = select(stores_[depth]);
    if (!var) return on_leaf(depth);

    const Store& s = stores_[depth];
    const int v = options_.values == ValueOrder::Ascending ? s.min(*var)
                                                           : s.max(*var);
    if (stores_.size() <= depth + 1) stores_.emplace_back();
    for (int branch = 0; branch < 2; ++branch) {
      stores_[depth + 1] = stores_[depth];
      Store& child = stores_[depth + 1];
      child.clear_changed();
      const bool ok = branch == 0 ? child.assign(*var, v) : child.remove(*var, v);
      if (!ok) continue;
      if (dive(depth + 1)) return true;
    }
    return false;
  }

  std::optional<VarId> select(const Store& s) const {
    for (VarId v : order_) {
      if (!s.fixed(v)) return v;
    }
    for (int i = 0; i < s.num_vars(); ++i) {
      if (!s.fixed(VarId{i})) return VarId{i};
    }
    return std::nullopt;
  }

  bool on_leaf(size_t depth) {
    SearchStats& st = result_.stats;
    Store& s = stores_[depth];
    if (model_.propagate(s, /*all=*/true) == PropStatus::Failed ||
        !s.all_fixed()) {
      ++st.fails;
      return false;
    }
    ++st.solutions;
    result_.values = s.values();
    result_.objective = model_.objective_value(s);
    if (!optimize_) return true;
    const int obj = *result_.objective;
    st.best_objective = obj;
    model_.set_objective_upper(obj - 1);
    return false;
  }

  Model& model_;
  std::vector<VarId> order_;
  SearchOptions options_;
  bool optimize_;
  Clock::time_point start_;
  std::deque<Store> stores_;
  bool first_node_ = true;
  bool timed_out_ = false;
  SearchResult result_;
};

}  // namespace

SearchResult label(Model& model, std::span<const VarId> order,
                   const SearchOptions& options) {
  return DepthFirst(model, order, options, /*optimize=*/false).run();
}

SearchResult minimize(Model& model, std::span<const VarId> order,
                      const SearchOptions& options) {
  return DepthFirst(model, order, options, /*optimize=*/true).run();
}

}  // namespace anglepack::fd
