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

#include "anglepack/bench.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "anglepack/io.h"

namespace anglepack::bench {
namespace {

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("bad size '" + std::string(s) + "'");
  }
  return v;
}

struct Job {
  int n;
  bool optimize;
  Relaxation relaxation;
};

}  // namespace

std::vector<AnglePiece> load_fixture_pieces(const std::filesystem::path& dir) {
  std::vector<AnglePiece> out;
  for (const char* name : {"table1.json", "table2.json"}) {
    const Instance inst = io::read_instance_file(dir / name);
    out.insert(out.end(), inst.pieces.begin(), inst.pieces.end());
  }
  return out;
}

Instance prefix_instance(const std::vector<AnglePiece>& pieces, int n,
                         const BenchConfig& config) {
  if (n < 1 || n > static_cast<int>(pieces.size())) {
    throw InputError("size " + std::to_string(n) + " outside 1.." +
                     std::to_string(pieces.size()));
  }
  std::vector<std::vector<int>> sizes;
  for (int i = 0; i < n; ++i) {
    const AnglePiece& p = pieces[i];
    sizes.push_back({p.a, p.b, p.c, p.d});
  }
  return make_instance(sizes, config.max_end_x, config.max_end_y, config.mode);
}

std::vector<int> parse_sizes(std::string_view text) {
  std::vector<int> out;
  if (const size_t dots = text.find(".."); dots != std::string_view::npos) {
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw InputError("empty size range '" + std::string(text) + "'");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = std::min(text.find(',', pos), text.size());
    out.push_back(parse_int(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

std::vector<BenchRow> run(const std::vector<AnglePiece>& pieces,
                          const BenchConfig& config) {
  std::vector<Job> jobs;
  for (int n : config.sizes) {
    prefix_instance(pieces, n, config);  // reject bad sizes before running
    for (bool opt : config.optimize) {
      for (Relaxation r : config.relaxations) jobs.push_back({n, opt, r});
    }
  }
  std::vector<BenchRow> rows(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      const Instance inst = prefix_instance(pieces, job.n, config);
      ModelConfig mc;
      mc.relaxation = job.relaxation;
      mc.optimize = job.optimize;
      mc.capacity_binding = config.capacity_binding;
      mc.strategy = config.strategy;
      mc.time_limit = config.time_limit;
      const Outcome out = solve(inst, mc);
      rows[i] = {job.n,           config.mode,     job.relaxation,
                 job.optimize,    config.capacity_binding,
                 out.status,      out.objective,   out.stats.nodes,
                 out.stats.fails, out.stats.elapsed.count()};
    }
  };
  const int n_threads =
      std::clamp(config.jobs, 1, std::max(1, static_cast<int>(jobs.size())));
  std::vector<std::thread> threads;
  for (int t = 1; t < n_threads; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  return rows;
}

std::string csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << to_string(r.mode) << ',' << to_string(r.relaxation)
        << ',' << (r.optimize ? "on" : "off") << ','
        << to_string(r.capacity_binding) << ',' << to_string(r.status) << ',';
    if (r.objective) out << *r.objective;
    out << ',' << r.nodes << ',' << r.fails << ',' << r.ms << "\n";
  }
  return out.str();
}

std::string format_duration(int64_t ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld.%03lld",
                static_cast<long long>(ms / 3'600'000),
                static_cast<long long>(ms / 60'000 % 60),
                static_cast<long long>(ms / 1000 % 60),
                static_cast<long long>(ms % 1000));
  return buf;
}

std::string markdown(const std::vector<BenchRow>& rows) {
  std::vector<Relaxation> relaxations;
  std::vector<bool> settings;
  for (const BenchRow& r : rows) {
    if (std::find(relaxations.begin(), relaxations.end(), r.relaxation) ==
        relaxations.end()) {
      relaxations.push_back(r.relaxation);
    }
    if (std::find(settings.begin(), settings.end(), r.optimize) ==
        settings.end()) {
      settings.push_back(r.optimize);
    }
  }

  std::ostringstream out;
  std::map<Relaxation, int64_t> total_ms;
  std::map<Relaxation, int> timeouts;
  for (bool opt : settings) {
    out << "### " << (rows.empty() ? "" : std::string(to_string(rows[0].mode)))
        << (opt ? ", with optimization" : ", without optimization") << "\n\n";
    out << "| Number of angles |";
    for (Relaxation r : relaxations) out << ' ' << to_string(r) << " [hh:mm:ss.ms] |";
    out << "\n|---|";
    for (size_t i = 0; i < relaxations.size(); ++i) out << "---|";
    out << "\n";
    std::vector<int> sizes;
    for (const BenchRow& r : rows) {
      if (r.optimize == opt &&
          std::find(sizes.begin(), sizes.end(), r.n) == sizes.end()) {
        sizes.push_back(r.n);
      }
    }
    for (int n : sizes) {
      out << "| " << n << " |";
      for (Relaxation rel : relaxations) {
        std::string cell = "n/a";
        for (const BenchRow& r : rows) {
          if (r.n != n || r.optimize != opt || r.relaxation != rel) continue;
          const bool timed_out = r.status == OutcomeStatus::Timeout ||
                                 (opt && r.status == OutcomeStatus::Feasible);
          cell = (timed_out ? ">" : "") + format_duration(r.ms);
          if (r.status == OutcomeStatus::Infeasible) cell += " (infeasible)";
          total_ms[rel] += r.ms;
          if (timed_out) ++timeouts[rel];
        }
        out << ' ' << cell << " |";
      }
      out << "\n";
    }
    out << "\n";
  }

  out << "Observation (not asserted): total time per relaxation";
  for (Relaxation r : relaxations) {
    out << ", " << to_string(r) << " " << format_duration(total_ms[r]) << " ("
        << timeouts[r] << " stopped by the time limit)";
  }
  out << ".";
  if (relaxations.size() >= 2) {
    const auto fastest = std::min_element(
        relaxations.begin(), relaxations.end(), [&](Relaxation a, Relaxation b) {
          return total_ms[a] < total_ms[b];
        });
    out << " Lowest total on this machine: " << to_string(*fastest) << ".";
  }
  out << "\n";
  return out.str();
}

}  // namespace anglepack::bench
