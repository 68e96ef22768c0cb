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

// Variables, stores, propagators and the propagation fixpoint.

#ifndef ANGLEPACK_FD_MODEL_H_
#define ANGLEPACK_FD_MODEL_H_

#include <chrono>
#include <climits>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anglepack/fd/domain.h"

namespace anglepack::fd {

struct VarId {
  int index = -1;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

// Domains of every variable of one model. Search copies whole stores, so a
// store is the unit of backtracking.
class Store {
 public:
  VarId add(Domain d);
  int num_vars() const { return static_cast<int>(doms_.size()); }

  const Domain& operator[](VarId v) const { return doms_[v.index]; }
  int min(VarId v) const { return doms_[v.index].min(); }
  int max(VarId v) const { return doms_[v.index].max(); }
  bool fixed(VarId v) const { return doms_[v.index].fixed(); }
  int value(VarId v) const { return doms_[v.index].value(); }
  bool contains(VarId v, int x) const { return doms_[v.index].contains(x); }

  // All mutators return false on wipe-out; the domain is then unchanged.
  bool set_min(VarId v, int x) { return note(v, doms_[v.index].remove_below(x)); }
  bool set_max(VarId v, int x) { return note(v, doms_[v.index].remove_above(x)); }
  bool remove(VarId v, int x) { return note(v, doms_[v.index].remove_value(x)); }
  bool assign(VarId v, int x) { return note(v, doms_[v.index].assign(x)); }

  // Variables modified since the last clear_changed(); may repeat.
  const std::vector<int>& changed() const { return changed_; }
  void clear_changed() { changed_.clear(); }

  bool all_fixed() const;
  std::vector<int> values() const;  // min of every domain

 private:
  bool note(VarId v, DomainEvent e) {
    if (e == DomainEvent::Changed) changed_.push_back(v.index);
    return e != DomainEvent::Failed;
  }

  std::vector<Domain> doms_;
  std::vector<int> changed_;
};

// A filtering unit. propagate() must only narrow domains, must never remove
// a value that belongs to a solution of its constraint, and must return false
// whenever the current domains are fixed and violate the constraint.
class Propagator {
 public:
  virtual ~Propagator() = default;
  virtual std::string_view name() const = 0;
  virtual std::vector<VarId> scope() const = 0;
  virtual bool propagate(Store& s) = 0;
};

enum class PropStatus { Stable, Failed };

struct SearchStats {
  int64_t nodes = 0;
  int64_t fails = 0;
  int64_t solutions = 0;
  std::optional<int> best_objective;
  std::chrono::milliseconds elapsed{0};
};

struct PropagateOptions {
  // Pop the queue in a pseudo-random order instead of FIFO. The fixpoint is
  // the same either way; tests use this to check it.
  std::optional<uint64_t> shuffle_seed;
};

class Model {
 public:
  Model();
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  VarId add_var(int lo, int hi, std::string name = {});
  VarId add_constant(int v);
  int num_vars() const { return root_.num_vars(); }
  const std::string& var_name(VarId v) const { return names_[v.index]; }

  void post(std::unique_ptr<Propagator> p);
  template <class P, class... Args>
  P& emplace(Args&&... args) {
    auto p = std::make_unique<P>(std::forward<Args>(args)...);
    P& ref = *p;
    post(std::move(p));
    return ref;
  }
  int num_propagators() const { return static_cast<int>(props_.size()); }
  const Propagator& propagator(int i) const { return *props_[i]; }

  // Objective = sum of `terms`, to be minimized. Posting it adds a bound
  // propagator enforcing sum <= objective_upper().
  void set_objective(std::vector<VarId> terms);
  const std::vector<VarId>& objective_terms() const { return objective_; }
  std::optional<int> objective_value(const Store& s) const;
  int objective_upper() const { return objective_upper_; }
  void set_objective_upper(int v) { objective_upper_ = v; }

  Store& store() { return root_; }
  const Store& store() const { return root_; }

  // Runs every propagator on the root store to a fixpoint.
  PropStatus propagate(const PropagateOptions& options = {});
  // Fixpoint on `s`. Seeds the queue with the watchers of s.changed(), plus
  // every propagator when `all` is set, plus the objective bound.
  PropStatus propagate(Store& s, bool all,
                       const PropagateOptions& options = {});

  SearchStats stats;

 private:
  void rebuild_watchers();

  Store root_;
  std::vector<std::string> names_;
  std::vector<std::unique_ptr<Propagator>> props_;
  std::vector<std::vector<int>> watchers_;  // var -> propagators
  bool watchers_dirty_ = true;
  std::vector<VarId> objective_;
  int objective_prop_ = -1;
  int objective_upper_ = INT_MAX;

  std::vector<int> queue_;
  std::vector<char> queued_;
};

}  // namespace anglepack::fd

#endif  // ANGLEPACK_FD_MODEL_H_
