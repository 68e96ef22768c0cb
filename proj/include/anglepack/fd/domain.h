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

#ifndef ANGLEPACK_FD_DOMAIN_H_
#define ANGLEPACK_FD_DOMAIN_H_

#include <cstdint>
#include <vector>

namespace anglepack::fd {

enum class DomainEvent { Unchanged, Changed, Failed };

// Finite set of integers with cheap bounds and exact holes. Values live in a
// bitset anchored at the initial lower bound; the first 64 values are stored
// inline so copying a narrow domain never allocates.
//
// Mutations only narrow. A mutation that would empty the set returns Failed
// and leaves the domain untouched.
class Domain {
 public:
  Domain(int lo, int hi);  // throws InputError when lo > hi

  int min() const { return lo_; }
  int max() const { return hi_; }
  bool fixed() const { return lo_ == hi_; }
  int value() const { return lo_; }  // meaningful when fixed()
  bool contains(int v) const;
  int size() const;
  std::vector<int> values() const;

  DomainEvent remove_below(int v);  // keep values >= v
  DomainEvent remove_above(int v);  // keep values <= v
  DomainEvent remove_value(int v);
  DomainEvent assign(int v);

  friend bool operator==(const Domain& a, const Domain& b);

 private:
  bool test(int v) const;
  void clear(int v);
  // First present value >= v (or > hi_ when none), last present value <= v.
  int next_present(int v) const;
  int prev_present(int v) const;
  uint64_t word(int k) const { return k == 0 ? word0_ : rest_[k - 1]; }
  uint64_t& word_ref(int k) { return k == 0 ? word0_ : rest_[k - 1]; }

  int base_;
  int lo_;
  int hi_;
  uint64_t word0_ = 0;
  std::vector<uint64_t> rest_;
};

}  // namespace anglepack::fd

#endif  // ANGLEPACK_FD_DOMAIN_H_
