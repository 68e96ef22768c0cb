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

// Timing harness over prefixes of a fixed piece list.

#ifndef ANGLEPACK_BENCH_H_
#define ANGLEPACK_BENCH_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anglepack/geometry.h"
#include "anglepack/packing.h"

namespace anglepack::bench {

inline constexpr std::string_view kCsvHeader =
    "n,mode,relaxation,optimize,capacity_binding,status,objective,nodes,fails,"
    "ms";

struct BenchConfig {
  std::vector<int> sizes;
  Mode mode = Mode::RotMirror;
  std::vector<Relaxation> relaxations{Relaxation::Cumulative,
                                      Relaxation::Trapeze};
  std::vector<bool> optimize{false, true};
  CapacityBinding capacity_binding = CapacityBinding::Tied;
  Strategy strategy = Strategy::Default;
  std::chrono::milliseconds time_limit{std::chrono::hours(2)};
  int max_end_x = 10;
  int max_end_y = 10;
  int jobs = 1;
};

struct BenchRow {
  int n = 0;
  Mode mode = Mode::RotMirror;
  Relaxation relaxation = Relaxation::Cumulative;
  bool optimize = false;
  CapacityBinding capacity_binding = CapacityBinding::Tied;
  OutcomeStatus status = OutcomeStatus::Infeasible;
  std::optional<int> objective;
  int64_t nodes = 0;
  int64_t fails = 0;
  int64_t ms = 0;
};

// Pieces of table1.json followed by table2.json in `dir`.
std::vector<AnglePiece> load_fixture_pieces(const std::filesystem::path& dir);

// The first n pieces, renumbered 1..n, under the config's mode and caps.
Instance prefix_instance(const std::vector<AnglePiece>& pieces, int n,
                         const BenchConfig& config);

// "4..7", "4,6,9" or "5". Throws InputError.
std::vector<int> parse_sizes(std::string_view text);

// Rows ordered by size, then optimize setting, then relaxation, whatever
// the job count.
std::vector<BenchRow> run(const std::vector<AnglePiece>& pieces,
                          const BenchConfig& config);

std::string csv(const std::vector<BenchRow>& rows);

// One table per optimize setting: a row per size, a time column per
// relaxation, ">" marking runs stopped by the time limit. Followed by an
// observational note comparing total times.
std::string markdown(const std::vector<BenchRow>& rows);

// hh:mm:ss.mmm
std::string format_duration(int64_t ms);

}  // namespace anglepack::bench

#endif  // ANGLEPACK_BENCH_H_
