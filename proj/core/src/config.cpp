// Copyright 2026 The dramcontend Authors.
//
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

#include "dramcontend/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "dramcontend/errors.hpp"
#include "dramcontend/sizes.hpp"

namespace dramcontend {
namespace {

using Setter = std::function<void(const YAML::Node&)>;

template <typename T>
T scalar(const YAML::Node& node, const std::string& key) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError("config: key '" + key + "' has an invalid value");
  }
}

Bytes size_value(const YAML::Node& node, const std::string& key) {
  if (!node.IsScalar()) throw ConfigError("config: key '" + key + "' must be a size");
  try {
    return parse_size(node.Scalar());
  } catch (const ConfigError& e) {
    throw ConfigError("config: key '" + key + "': " + e.what());
  }
}

void apply_section(const YAML::Node& section, const std::string& name, const std::map<std::string, Setter>& keys) {
  if (!section) return;
  if (!section.IsMap()) throw ConfigError("config: section '" + name + "' must be a map");
  for (const auto& kv : section) {
    const auto key = kv.first.as<std::string>();
    const auto it = keys.find(key);
    if (it == keys.end()) throw ConfigError("config: unknown key '" + key + "' in section '" + name + "'");
    it->second(kv.second);
  }
}

std::map<std::string, Setter> geometry_keys(GeometryParams& g) {
  auto u32 = [](std::uint32_t& field, std::string key) {
    return [&field, key](const YAML::Node& n) { field = scalar<std::uint32_t>(n, key); };
  };
  return {
      {"chips", u32(g.chips, "chips")},
      {"bank_groups", u32(g.bank_groups, "bank_groups")},
      {"banks_per_group", u32(g.banks_per_group, "banks_per_group")},
      {"rows_per_bank", u32(g.rows_per_bank, "rows_per_bank")},
      {"columns_per_row", u32(g.columns_per_row, "columns_per_row")},
      {"column_width_bits", u32(g.column_width_bits, "column_width_bits")},
      {"row_slice_bytes", [&g](const YAML::Node& n) { g.row_slice_bytes = size_value(n, "row_slice_bytes"); }},
      {"chip_chunk_bytes", [&g](const YAML::Node& n) { g.chip_chunk_bytes = size_value(n, "chip_chunk_bytes"); }},
      {"interleave_mode",
       [&g](const YAML::Node& n) {
         g.interleave_mode = parse_interleave_mode(scalar<std::string>(n, "interleave_mode"));
       }},
  };
}

std::map<std::string, Setter> timing_keys(TimingParams& t) {
  auto cyc = [](Cycle& field, std::string key) {
    return [&field, key](const YAML::Node& n) { field = scalar<Cycle>(n, key); };
  };
  return {
      {"cas_cycles", cyc(t.cas_cycles, "cas_cycles")},
      {"rcd_cycles", cyc(t.rcd_cycles, "rcd_cycles")},
      {"rp_cycles", cyc(t.rp_cycles, "rp_cycles")},
      {"refresh_interval_cycles", cyc(t.refresh_interval_cycles, "refresh_interval_cycles")},
      {"refresh_duration_cycles", cyc(t.refresh_duration_cycles, "refresh_duration_cycles")},
      {"bus_transfer_cycles", cyc(t.bus_transfer_cycles, "bus_transfer_cycles")},
  };
}

std::map<std::string, Setter> experiment_keys(ExperimentConfig& e) {
  return {
      {"mode", [&e](const YAML::Node& n) { e.mode = parse_experiment_mode(scalar<std::string>(n, "mode")); }},
      {"benchmark", [&e](const YAML::Node& n) { e.benchmark_bytes = size_value(n, "benchmark"); }},
      {"workload", [&e](const YAML::Node& n) { e.workload_bytes = size_value(n, "workload"); }},
      {"attackers", [&e](const YAML::Node& n) { e.attackers = scalar<std::uint32_t>(n, "attackers"); }},
      {"repetitions", [&e](const YAML::Node& n) { e.repetitions = scalar<std::uint32_t>(n, "repetitions"); }},
      {"policy", [&e](const YAML::Node& n) { e.policy = parse_policy(scalar<std::string>(n, "policy")); }},
      {"seed", [&e](const YAML::Node& n) { e.seed = scalar<std::uint64_t>(n, "seed"); }},
      {"op", [&e](const YAML::Node& n) { e.op = parse_memory_op(scalar<std::string>(n, "op")); }},
      {"sync", [&e](const YAML::Node& n) { e.sync = parse_sync_mode(scalar<std::string>(n, "sync")); }},
      {"tie_noise", [&e](const YAML::Node& n) { e.tie_noise = scalar<bool>(n, "tie_noise"); }},
      {"iterations", [&e](const YAML::Node& n) { e.iterations = scalar<std::uint64_t>(n, "iterations"); }},
  };
}

}  // namespace

SimulationConfig parse_config(std::string_view yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  SimulationConfig cfg;
  if (!root || root.IsNull()) return cfg;
  if (!root.IsMap()) throw ConfigError("config: top level must be a map");

  static const char* kSections[] = {"geometry", "timing", "experiment", "grid", "output"};
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (std::find(std::begin(kSections), std::end(kSections), key) == std::end(kSections)) {
      throw ConfigError("config: unknown section '" + key + "'");
    }
  }

  apply_section(root["geometry"], "geometry", geometry_keys(cfg.geometry));
  apply_section(root["timing"], "timing", timing_keys(cfg.experiment.timing));
  apply_section(root["experiment"], "experiment", experiment_keys(cfg.experiment));

  if (const auto grid = root["grid"]) {
    if (!grid.IsSequence()) throw ConfigError("config: section 'grid' must be a list of points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      ExperimentConfig point = cfg.experiment;
      apply_section(grid[i], "grid[" + std::to_string(i) + "]", experiment_keys(point));
      cfg.grid.push_back(point);
    }
  }

  std::string dir;
  apply_section(root["output"], "output",
                {{"dir", [&dir](const YAML::Node& n) { dir = scalar<std::string>(n, "dir"); }},
                 {"trace", [&cfg](const YAML::Node& n) { cfg.write_trace = scalar<bool>(n, "trace"); }}});
  if (!dir.empty()) cfg.output_dir = dir;
  return cfg;
}

SimulationConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

GeometryParams load_geometry(const std::filesystem::path& path) { return load_config(path).geometry; }

}  // namespace dramcontend
