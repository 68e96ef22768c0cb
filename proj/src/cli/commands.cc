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

#include "anglepack/cli.h"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "anglepack/bench.h"
#include "anglepack/geometry.h"
#include "anglepack/io.h"
#include "anglepack/oracle.h"
#include "anglepack/packing.h"
#include "anglepack/render.h"

#ifndef ANGLEPACK_DATA_DIR
#define ANGLEPACK_DATA_DIR "data"
#endif

namespace anglepack::cli {
namespace {

// Parses `args` into `app` and runs `body`. Flag errors and InputError map
// to exit 3 with a diagnostic on `err`.
int guarded(CLI::App& app, const std::vector<std::string>& args,
            std::ostream& out, std::ostream& err,
            const std::function<int()>& body) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kExitInvalid;
  }
  try {
    return body();
  } catch (const InputError& e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kExitInvalid;
  }
}

int exit_code(OutcomeStatus s) {
  switch (s) {
    case OutcomeStatus::Optimal:
    case OutcomeStatus::Feasible: return kExitOk;
    case OutcomeStatus::Infeasible: return kExitInfeasible;
    case OutcomeStatus::Timeout: return kExitTimeout;
  }
  return kExitInvalid;
}

void emit_layout(const io::LayoutFile& file, const std::string& out_path,
                 std::ostream& out) {
  const std::string text = io::write_layout(file);
  if (out_path.empty()) {
    out << text;
  } else {
    io::write_text(out_path, text);
    out << file.status;
    if (file.objective) out << " objective " << *file.objective;
    out << "\n";
  }
}

int64_t elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

int run_solve(const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
  CLI::App app("Solve an angle packing instance", "solve");
  std::string instance_path, relax = "cumulative", cap = "tied",
                             strategy = "default", out_path, svg_path;
  bool optimize = false, first = false;
  std::optional<int> time_limit_s;
  app.add_option("instance", instance_path, "Instance JSON file")->required();
  app.add_option("--relax", relax, "none, cumulative, trapeze or both");
  auto* opt_flag = app.add_flag("--optimize", optimize,
                                "Minimise end_x + end_y (default)");
  app.add_flag("--first", first, "Stop at the first layout")
      ->excludes(opt_flag);
  app.add_option("--cap", cap, "Relaxation capacity: tied or free");
  app.add_option("--time-limit-s", time_limit_s, "Time limit in seconds")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--strategy", strategy, "Labeling order: default or paper");
  app.add_option("--out", out_path, "Write the layout JSON here");
  app.add_option("--svg", svg_path, "Also render the layout as SVG");
  return guarded(app, args, out, err, [&] {
    const Instance inst = io::read_instance_file(instance_path);
    ModelConfig config;
    config.relaxation = parse_relaxation(relax);
    config.capacity_binding = parse_capacity_binding(cap);
    config.strategy = parse_strategy(strategy);
    config.optimize = !first;
    if (time_limit_s) config.time_limit = std::chrono::seconds(*time_limit_s);
    const Outcome outcome = solve(inst, config);
    const io::LayoutFile file = io::to_layout_file(inst, outcome);
    emit_layout(file, out_path, out);
    if (!svg_path.empty() && file.has_layout()) {
      io::write_text(svg_path, render::svg(file));
    }
    return exit_code(outcome.status);
  });
}

int run_validate(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  CLI::App app("Check a layout against an instance", "validate");
  std::string instance_path, layout_path;
  app.add_option("instance", instance_path, "Instance JSON file")->required();
  app.add_option("layout", layout_path, "Layout JSON file")->required();
  return guarded(app, args, out, err, [&] {
    const Instance inst = io::read_instance_file(instance_path);
    const io::LayoutFile file = io::read_layout_file(layout_path);
    const ValidationReport report = validate_layout(inst, file.layout());
    if (report.ok()) {
      out << "valid\n";
      return kExitOk;
    }
    for (const Violation& v : report.violations) {
      out << to_string(v.kind) << ": " << v.message << "\n";
    }
    return kExitInfeasible;
  });
}

int run_oracle(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app("Exact optimum by exhaustive enumeration", "oracle");
  std::string instance_path, out_path;
  OracleOptions options;
  app.add_option("instance", instance_path, "Instance JSON file")->required();
  app.add_option("--budget", options.budget, "Placement attempts allowed")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write the layout JSON here");
  return guarded(app, args, out, err, [&] {
    const Instance inst = io::read_instance_file(instance_path);
    const auto t0 = std::chrono::steady_clock::now();
    const OracleResult result = brute_force_optimal(inst, options);
    emit_layout(io::to_layout_file(inst, result, elapsed_ms(t0)), out_path,
                out);
    switch (result.status) {
      case OracleStatus::Optimal: return kExitOk;
      case OracleStatus::Infeasible: return kExitInfeasible;
      case OracleStatus::BudgetExceeded:
        err << "oracle: budget of " << options.budget
            << " placement attempts exceeded\n";
        return kExitTimeout;
    }
    return kExitInvalid;
  });
}

int run_render(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app("Draw a layout as SVG or ASCII", "render");
  std::string layout_path, svg_path;
  bool ascii = false;
  int cell_px = 40;
  app.add_option("layout", layout_path, "Layout JSON file")->required();
  auto* svg_opt = app.add_option("--svg", svg_path, "SVG output path");
  auto* ascii_flag = app.add_flag("--ascii", ascii, "Print an ASCII grid");
  app.add_option("--cell-px", cell_px, "SVG pixels per unit")
      ->check(CLI::PositiveNumber);
  svg_opt->excludes(ascii_flag);
  return guarded(app, args, out, err, [&] {
    if (svg_path.empty() && !ascii) {
      throw InputError("one of --svg or --ascii is required");
    }
    const io::LayoutFile file = io::read_layout_file(layout_path);
    if (ascii) {
      out << render::ascii(file);
    } else {
      io::write_text(svg_path, render::svg(file, cell_px));
    }
    return kExitOk;
  });
}

int run_bench(const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
  CLI::App app("Time the solver on prefixes of the fixture pieces", "bench");
  std::string sizes = "4..10", mode = "rot_mirror",
              relax = "cumulative,trapeze", optimize = "both", cap = "tied",
              strategy = "default", csv_path, md_path,
              fixtures = ANGLEPACK_DATA_DIR;
  int time_limit_s = 7200;
  int max_end = 10;
  int jobs = 1;
  app.add_option("--sizes", sizes, "Piece counts, e.g. 4..7 or 4,6");
  app.add_option("--mode", mode, "fixed or rot_mirror");
  app.add_option("--relax", relax, "Comma separated relaxations");
  app.add_option("--optimize", optimize, "both, on or off")
      ->check(CLI::IsMember({"both", "on", "off"}));
  app.add_option("--cap", cap, "tied or free");
  app.add_option("--strategy", strategy, "default or paper");
  app.add_option("--time-limit-s", time_limit_s, "Per-run limit in seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-end", max_end, "Caps on end_x and end_y")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "Runs in parallel")
      ->check(CLI::PositiveNumber);
  app.add_option("--csv", csv_path, "CSV output path (default stdout)");
  app.add_option("--md", md_path, "Markdown report path");
  app.add_option("--fixtures", fixtures, "Directory holding table1/2.json");
  return guarded(app, args, out, err, [&] {
    bench::BenchConfig config;
    config.sizes = bench::parse_sizes(sizes);
    config.mode = parse_mode(mode);
    config.relaxations.clear();
    std::istringstream relax_list(relax);
    for (std::string item; std::getline(relax_list, item, ',');) {
      config.relaxations.push_back(parse_relaxation(item));
    }
    if (config.relaxations.empty()) throw InputError("--relax is empty");
    if (optimize == "on") config.optimize = {true};
    if (optimize == "off") config.optimize = {false};
    config.capacity_binding = parse_capacity_binding(cap);
    config.strategy = parse_strategy(strategy);
    config.time_limit = std::chrono::seconds(time_limit_s);
    config.max_end_x = config.max_end_y = max_end;
    config.jobs = jobs;
    const auto pieces = bench::load_fixture_pieces(fixtures);
    const auto rows = bench::run(pieces, config);
    const std::string csv = bench::csv(rows);
    if (csv_path.empty()) {
      out << csv;
    } else {
      io::write_text(csv_path, csv);
    }
    if (!md_path.empty()) io::write_text(md_path, bench::markdown(rows));
    return kExitOk;
  });
}

int run_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  static const char* kUsage =
      "usage: anglepack <solve|validate|oracle|render|bench> [options]\n"
      "       anglepack <command> --help\n";
  if (args.empty()) {
    err << kUsage;
    return kExitInvalid;
  }
  const std::string& cmd = args[0];
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  if (cmd == "solve") return run_solve(rest, out, err);
  if (cmd == "validate") return run_validate(rest, out, err);
  if (cmd == "oracle") return run_oracle(rest, out, err);
  if (cmd == "render") return run_render(rest, out, err);
  if (cmd == "bench") return run_bench(rest, out, err);
  if (cmd == "-h" || cmd == "--help" || cmd == "help") {
    out << kUsage;
    return kExitOk;
  }
  err << "unknown command '" << cmd << "'\n" << kUsage;
  return kExitInvalid;
}

}  // namespace anglepack::cli
