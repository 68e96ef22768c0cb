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

// Depth-first labeling and branch-and-bound minimization.
//
// Branching is binary: x = v, then x != v, with x the first unfixed variable
// of the given order and v its smallest (or largest) value. Once the order is
// exhausted, any remaining unfixed model variable is labeled in index order,
// so every leaf is a full assignment. Each leaf is re-checked by running all
// propagators before it is accepted.

#ifndef ANGLEPACK_FD_SEARCH_H_
#define ANGLEPACK_FD_SEARCH_H_

#include <chrono>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "anglepack/fd/model.h"

namespace anglepack::fd {

enum class ValueOrder { Ascending, Descending };

struct SearchOptions {
  ValueOrder values = ValueOrder::Ascending;
  std::optional<std::chrono::milliseconds> time_limit;
};

enum class SearchStatus {
  Feasible,    // label(): a solution was found
  Optimal,     // minimize(): the incumbent was proved optimal
  Infeasible,  // search exhausted without a solution
  Timeout,     // limit hit; `values` holds the incumbent if any
};

std::string_view to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<std::vector<int>> values;  // one value per model variable
  std::optional<int> objective;
  SearchStats stats;
};

// First solution in depth-first order, or none. Copies model.stats from the
// result.
SearchResult label(Model& model, std::span<const VarId> order,
                   const SearchOptions& options = {});

// Branch and bound on model.objective_terms(): every incumbent with value v
// tightens the bound to v - 1 and the search continues. The model's bound is
// restored afterwards.
SearchResult minimize(Model& model, std::span<const VarId> order,
                      const SearchOptions& options = {});

}  // namespace anglepack::fd

#endif  // ANGLEPACK_FD_SEARCH_H_
