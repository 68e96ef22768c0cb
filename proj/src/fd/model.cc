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

#include "anglepack/fd/model.h"

#include <random>

#include "anglepack/fd/basic.h"
#include "anglepack/geometry.h"

namespace anglepack::fd {

VarId Store::add(Domain d) {
  doms_.push_back(std::move(d));
  return VarId{static_cast<int>(doms_.size()) - 1};
}

bool Store::all_fixed() const {
  for (const Domain& d : doms_) {
    if (!d.fixed()) return false;
  }
  return true;
}

std::vector<int> Store::values() const {
  std::vector<int> out;
  out.reserve(doms_.size());
  for (const Domain& d : doms_) out.push_back(d.min());
  return out;
}

namespace {

// sum(terms) <= model.objective_upper(), read at every call so branch and
// bound can tighten it between nodes.
class ObjectiveBound : public Propagator {
 public:
  ObjectiveBound(const Model* model, std::vector<VarId> terms)
      : model_(model), terms_(std::move(terms)), ones_(terms_.size(), 1) {}

  std::string_view name() const override { return "objective_bound"; }
  std::vector<VarId> scope() const override { return terms_; }
  bool propagate(Store& s) override {
    if (model_->objective_upper() == INT_MAX) return true;
    return propagate_linear_le(s, ones_, terms_, model_->objective_upper());
  }

 private:
  const Model* model_;
  std::vector<VarId> terms_;
  std::vector<int> ones_;
};

}  // namespace

Model::Model() = default;

VarId Model::add_var(int lo, int hi, std::string name) {
  VarId v = root_.add(Domain(lo, hi));
  names_.push_back(std::move(name));
  watchers_dirty_ = true;
  return v;
}

VarId Model::add_constant(int v) {
  return add_var(v, v, "const" + std::to_string(v));
}

void Model::post(std::unique_ptr<Propagator> p) {
  for (VarId v : p->scope()) {
    if (v.index < 0 || v.index >= num_vars()) {
      throw InputError(std::string(p->name()) +
                       ": references a variable outside this model");
    }
  }
  props_.push_back(std::move(p));
  watchers_dirty_ = true;
}

void Model::set_objective(std::vector<VarId> terms) {
  if (objective_prop_ >= 0) throw InputError("objective already set");
  objective_ = terms;
  post(std::make_unique<ObjectiveBound>(this, std::move(terms)));
  objective_prop_ = num_propagators() - 1;
}

std::optional<int> Model::objective_value(const Store& s) const {
  if (objective_.empty()) return std::nullopt;
  int sum = 0;
  for (VarId v : objective_) {
    if (!s.fixed(v)) return std::nullopt;
    sum += s.value(v);
  }
  return sum;
}

void Model::rebuild_watchers() {
  watchers_.assign(num_vars(), {});
  for (int i = 0; i < num_propagators(); ++i) {
    for (VarId v : props_[i]->scope()) {
      auto& w = watchers_[v.index];
      if (w.empty() || w.back() != i) w.push_back(i);
    }
  }
  queued_.assign(props_.size(), 0);
  watchers_dirty_ = false;
}

PropStatus Model::propagate(const PropagateOptions& options) {
  return propagate(root_, /*all=*/true, options);
}

PropStatus Model::propagate(Store& s, bool all,
                            const PropagateOptions& options) {
  if (watchers_dirty_) rebuild_watchers();
  queue_.clear();
  std::fill(queued_.begin(), queued_.end(), 0);
  auto enqueue = [this](int p) {
    if (!queued_[p]) {
      queued_[p] = 1;
      queue_.push_back(p);
    }
  };
  auto enqueue_changed = [&] {
    for (int v : s.changed()) {
      for (int p : watchers_[v]) enqueue(p);
    }
    s.clear_changed();
  };

  if (all) {
    for (int p = 0; p < num_propagators(); ++p) enqueue(p);
    s.clear_changed();
  } else {
    enqueue_changed();
    if (objective_prop_ >= 0) enqueue(objective_prop_);
  }

  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);
  size_t head = 0;
  while (head < queue_.size()) {
    if (rng) {
      std::uniform_int_distribution<size_t> pick(head, queue_.size() - 1);
      std::swap(queue_[head], queue_[pick(*rng)]);
    }
    const int p = queue_[head++];
    queued_[p] = 0;
    if (!props_[p]->propagate(s)) {
      s.clear_changed();
      return PropStatus::Failed;
    }
    enqueue_changed();
    if (head > 4096 && head * 2 > queue_.size()) {
      queue_.erase(queue_.begin(), queue_.begin() + static_cast<long>(head));
      head = 0;
    }
  }
  return PropStatus::Stable;
}

}  // namespace anglepack::fd
