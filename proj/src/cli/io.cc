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

#include "anglepack/io.h"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace anglepack::io {
namespace {

using nlohmann::json;

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw InputError(what + ": unknown key '" + it.key() + "'");
  }
  for (const char* k : keys) {
    if (!j.contains(k)) {
      throw InputError(what + ": missing key '" + std::string(k) + "'");
    }
  }
}

int get_int(const json& j, const char* key, const std::string& what) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw InputError(what + ": '" + key + "' must be an integer");
  }
  return v.get<int>();
}

int64_t get_int64(const json& j, const char* key, const std::string& what) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) {
    throw InputError(what + ": '" + key + "' must be an integer");
  }
  return v.get<int64_t>();
}

std::optional<int> get_opt_int(const json& j, const char* key,
                               const std::string& what) {
  if (j.at(key).is_null()) return std::nullopt;
  return get_int(j, key, what);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json opt(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

Instance parse_instance(const std::string& text) {
  const json j = parse_json(text);
  require_keys(j, {"pieces", "max_end_x", "max_end_y", "mode"}, "instance");
  const json& pieces = j.at("pieces");
  if (!pieces.is_array()) throw InputError("instance: 'pieces' must be an array");
  std::vector<std::vector<int>> sizes;
  for (const json& p : pieces) {
    if (!p.is_array() || p.size() != 4) {
      throw InputError("instance: each piece must be an array of 4 integers");
    }
    std::vector<int> s;
    for (const json& v : p) {
      if (!v.is_number_integer()) {
        throw InputError("instance: piece sizes must be integers");
      }
      s.push_back(v.get<int>());
    }
    sizes.push_back(std::move(s));
  }
  if (!j.at("mode").is_string()) {
    throw InputError("instance: 'mode' must be a string");
  }
  return make_instance(sizes, get_int(j, "max_end_x", "instance"),
                       get_int(j, "max_end_y", "instance"),
                       parse_mode(j.at("mode").get<std::string>()));
}

std::string write_instance(const Instance& instance) {
  json pieces = json::array();
  for (const AnglePiece& p : instance.pieces) {
    pieces.push_back({p.a, p.b, p.c, p.d});
  }
  json j = {{"pieces", pieces},
            {"max_end_x", instance.max_end_x},
            {"max_end_y", instance.max_end_y},
            {"mode", to_string(instance.mode)}};
  return j.dump(2) + "\n";
}

Instance read_instance_file(const std::filesystem::path& path) {
  return parse_instance(read_text(path));
}

Layout LayoutFile::layout() const {
  if (!has_layout()) throw InputError("layout file has no layout");
  Layout l;
  l.end_x = *end_x;
  l.end_y = *end_y;
  for (const PlacedPiece& p : placements) {
    l.placements.push_back({p.piece, p.orientation, p.x, p.y});
  }
  return l;
}

LayoutFile parse_layout(const std::string& text) {
  const json j = parse_json(text);
  const std::string what = "layout";
  require_keys(j, {"status", "objective", "end_x", "end_y", "placements", "stats"},
               what);
  LayoutFile f;
  if (!j.at("status").is_string()) {
    throw InputError("layout: 'status' must be a string");
  }
  f.status = j.at("status").get<std::string>();
  f.objective = get_opt_int(j, "objective", what);
  f.end_x = get_opt_int(j, "end_x", what);
  f.end_y = get_opt_int(j, "end_y", what);
  if (!j.at("placements").is_array()) {
    throw InputError("layout: 'placements' must be an array");
  }
  for (const json& p : j.at("placements")) {
    require_keys(p, {"piece", "orientation", "x", "y", "rects"}, "placement");
    PlacedPiece pp{get_int(p, "piece", "placement"),
                   get_int(p, "orientation", "placement"),
                   get_int(p, "x", "placement"), get_int(p, "y", "placement"),
                   {}};
    if (!p.at("rects").is_array()) {
      throw InputError("placement: 'rects' must be an array");
    }
    for (const json& r : p.at("rects")) {
      require_keys(r, {"x", "y", "w", "h"}, "rect");
      pp.rects.push_back({get_int(r, "x", "rect"), get_int(r, "y", "rect"),
                          get_int(r, "w", "rect"), get_int(r, "h", "rect")});
    }
    f.placements.push_back(std::move(pp));
  }
  const json& s = j.at("stats");
  require_keys(s, {"nodes", "fails", "ms"}, "stats");
  f.stats = {get_int64(s, "nodes", "stats"), get_int64(s, "fails", "stats"),
             get_int64(s, "ms", "stats")};
  return f;
}

std::string write_layout(const LayoutFile& f) {
  json placements = json::array();
  for (const PlacedPiece& p : f.placements) {
    json rects = json::array();
    for (const Rect& r : p.rects) {
      rects.push_back({{"x", r.x}, {"y", r.y}, {"w", r.w}, {"h", r.h}});
    }
    placements.push_back({{"piece", p.piece},
                          {"orientation", p.orientation},
                          {"x", p.x},
                          {"y", p.y},
                          {"rects", rects}});
  }
  json j = {{"status", f.status},
            {"objective", opt(f.objective)},
            {"end_x", opt(f.end_x)},
            {"end_y", opt(f.end_y)},
            {"placements", placements},
            {"stats",
             {{"nodes", f.stats.nodes},
              {"fails", f.stats.fails},
              {"ms", f.stats.ms}}}};
  return j.dump(2) + "\n";
}

LayoutFile read_layout_file(const std::filesystem::path& path) {
  return parse_layout(read_text(path));
}

namespace {

void fill_layout(const Instance& instance, const Layout& layout,
                 LayoutFile& f) {
  f.end_x = layout.end_x;
  f.end_y = layout.end_y;
  for (const Placement& p : layout.placements) {
    f.placements.push_back(
        {p.piece_id, p.orient, p.x, p.y, placed_rects(instance, p)});
  }
}

}  // namespace

LayoutFile to_layout_file(const Instance& instance, const Outcome& outcome) {
  LayoutFile f;
  f.status = std::string(to_string(outcome.status));
  f.objective = outcome.objective;
  if (outcome.layout) fill_layout(instance, *outcome.layout, f);
  f.stats = {outcome.stats.nodes, outcome.stats.fails,
             outcome.stats.elapsed.count()};
  return f;
}

LayoutFile to_layout_file(const Instance& instance, const OracleResult& result,
                          int64_t ms) {
  LayoutFile f;
  switch (result.status) {
    case OracleStatus::Optimal: f.status = "Optimal"; break;
    case OracleStatus::Infeasible: f.status = "Infeasible"; break;
    case OracleStatus::BudgetExceeded: f.status = "BudgetExceeded"; break;
  }
  f.objective = result.objective;
  if (result.layout) fill_layout(instance, *result.layout, f);
  f.stats = {result.attempts, 0, ms};
  return f;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

}  // namespace anglepack::io
