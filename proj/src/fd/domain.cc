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

#include "anglepack/fd/domain.h"

#include <bit>
#include <string>

#include "anglepack/geometry.h"

namespace anglepack::fd {

Domain::Domain(int lo, int hi) : base_(lo), lo_(lo), hi_(hi) {
  if (lo > hi) {
    throw InputError("empty domain " + std::to_string(lo) + ".." +
                     std::to_string(hi));
  }
  const int64_t width = static_cast<int64_t>(hi) - lo + 1;
  const int words = static_cast<int>((width + 63) / 64);
  rest_.assign(words - 1, ~uint64_t{0});
  word0_ = ~uint64_t{0};
}

bool Domain::test(int v) const {
  const int i = v - base_;
  return (word(i >> 6) >> (i & 63)) & 1;
}

void Domain::clear(int v) {
  const int i = v - base_;
  word_ref(i >> 6) &= ~(uint64_t{1} << (i & 63));
}

bool Domain::contains(int v) const {
  return v >= lo_ && v <= hi_ && test(v);
}

int Domain::size() const {
  int count = 0;
  const int first = lo_ - base_;
  const int last = hi_ - base_;
  for (int k = first >> 6; k <= (last >> 6); ++k) {
    uint64_t w = word(k);
    if (k == (first >> 6)) w &= ~uint64_t{0} << (first & 63);
    if (k == (last >> 6) && (last & 63) != 63) {
      w &= (uint64_t{1} << ((last & 63) + 1)) - 1;
    }
    count += std::popcount(w);
  }
  return count;
}

std::vector<int> Domain::values() const {
  std::vector<int> out;
  for (int v = lo_; v <= hi_; v = next_present(v + 1)) out.push_back(v);
  return out;
}

int Domain::next_present(int v) const {
  if (v < lo_) v = lo_;
  while (v <= hi_) {
    const int i = v - base_;
    const uint64_t w = word(i >> 6) >> (i & 63);
    if (w != 0) {
      const int next = v + std::countr_zero(w);
      return next <= hi_ ? next : hi_ + 1;
    }
    v += 64 - (i & 63);
  }
  return hi_ + 1;
}

int Domain::prev_present(int v) const {
  if (v > hi_) v = hi_;
  while (v >= lo_) {
    const int i = v - base_;
    const int shift = 63 - (i & 63);
    const uint64_t w = word(i >> 6) << shift;
    if (w != 0) {
      const int prev = v - std::countl_zero(w);
      return prev >= lo_ ? prev : lo_ - 1;
    }
    v -= (i & 63) + 1;
  }
  return lo_ - 1;
}

DomainEvent Domain::remove_below(int v) {
  if (v <= lo_) return DomainEvent::Unchanged;
  if (v > hi_) return DomainEvent::Failed;
  const int next = next_present(v);
  if (next > hi_) return DomainEvent::Failed;
  lo_ = next;
  return DomainEvent::Changed;
}

DomainEvent Domain::remove_above(int v) {
  if (v >= hi_) return DomainEvent::Unchanged;
  if (v < lo_) return DomainEvent::Failed;
  const int prev = prev_present(v);
  if (prev < lo_) return DomainEvent::Failed;
  hi_ = prev;
  return DomainEvent::Changed;
}

DomainEvent Domain::remove_value(int v) {
  if (!contains(v)) return DomainEvent::Unchanged;
  if (lo_ == hi_) return DomainEvent::Failed;
  clear(v);
  if (v == lo_) lo_ = next_present(v + 1);
  if (v == hi_) hi_ = prev_present(v - 1);
  return DomainEvent::Changed;
}

DomainEvent Domain::assign(int v) {
  if (!contains(v)) return DomainEvent::Failed;
  if (lo_ == hi_) return DomainEvent::Unchanged;
  lo_ = hi_ = v;
  return DomainEvent::Changed;
}

bool operator==(const Domain& a, const Domain& b) {
  return a.values() == b.values();
}

}  // namespace anglepack::fd
