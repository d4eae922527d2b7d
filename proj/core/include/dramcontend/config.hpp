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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dramcontend/bank_engine.hpp"
#include "dramcontend/experiment.hpp"
#include "dramcontend/geometry.hpp"

namespace dramcontend {

// Contents of a YAML configuration file. Every section and key is optional;
// absent keys keep their defaults, unknown keys are rejected by name.
//
//   geometry:    chips, bank_groups, banks_per_group, rows_per_bank,
//                columns_per_row, column_width_bits, row_slice_bytes,
//                chip_chunk_bytes, interleave_mode (HighOrder | LowOrder)
//   timing:      cas_cycles, rcd_cycles, rp_cycles, refresh_interval_cycles,
//                refresh_duration_cycles, bus_transfer_cycles
//   experiment:  mode, benchmark, workload, attackers, repetitions, policy,
//                seed, op, sync, tie_noise, iterations
//   grid:        list of maps with experiment keys; each point starts from
//                the experiment section
//   output:      dir, trace
//
// Sizes accept plain byte counts or binary suffixes (1K, 256K, 2M).
struct SimulationConfig {
  GeometryParams geometry{};
  ExperimentConfig experiment{};  // timing section is stored in experiment.timing
  std::vector<ExperimentConfig> grid;
  std::optional<std::filesystem::path> output_dir;
  bool write_trace = false;
};

SimulationConfig parse_config(std::string_view yaml_text);
SimulationConfig load_config(const std::filesystem::path& path);

// Geometry section of a configuration file, defaults for absent keys.
GeometryParams load_geometry(const std::filesystem::path& path);

}  // namespace dramcontend
