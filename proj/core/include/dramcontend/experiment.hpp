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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dramcontend/bank_engine.hpp"
#include "dramcontend/errors.hpp"
#include "dramcontend/geometry.hpp"
#include "dramcontend/workloads.hpp"

namespace dramcontend {

enum class ExperimentMode { Navigate, Bomb, VictimOnly };

std::string_view to_string(ExperimentMode mode);
ExperimentMode parse_experiment_mode(std::string_view text);

// Raised when two summaries cannot be compared.
class ComparisonError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// One point of a design-of-experiment grid.
struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::Navigate;
  Bytes benchmark_bytes = 1024;
  Bytes workload_bytes = 256 * 1024;
  std::uint32_t attackers = 1;  // cores in use minus the victim's; ignored for VictimOnly
  std::uint32_t repetitions = 100;
  ArbitrationPolicy policy = ArbitrationPolicy::Fcfs;
  TimingParams timing{};
  std::uint64_t seed = 0;
  MemoryOp op = MemoryOp::Write;
  SyncMode sync = SyncMode::Lockstep;
  bool tie_noise = false;        // seeded same-cycle tie order instead of rotating
  std::uint64_t iterations = 0;  // 0 derives the count from the workload (see plan())

  // Throws ConfigError naming the violated factor.
  void validate(const DramGeometry& geometry) const;

  // Navigate and Bomb: nsamples(block_slots, attackers) unless `iterations`
  // overrides it for Bomb. VictimOnly: block_slots unless overridden.
  IterationPlan plan() const;
  std::uint64_t block_slots() const { return workload_bytes / benchmark_bytes; }
  std::uint32_t effective_attackers() const { return mode == ExperimentMode::VictimOnly ? 0 : attackers; }

  bool operator==(const ExperimentConfig&) const = default;
};

struct RunSummary {
  ExperimentConfig config{};
  std::uint32_t run_id = 0;
  std::uint64_t nsamples = 0;           // victim iterations per repetition
  std::uint64_t samples = 0;            // block_slots * repetitions
  std::uint64_t victim_iterations = 0;  // nsamples * repetitions

  double victim_total_cycles = 0;  // per-repetition sum of victim cycles, averaged over repetitions
  double victim_mean_cycles = 0;
  Cycle victim_max_cycles = 0;  // observed WCET
  Cycle victim_p99_cycles = 0;
  double victim_stddev_cycles = 0;

  std::uint64_t conflict_count = 0;
  std::uint64_t hit_count = 0;
  std::uint64_t open_count = 0;

  std::vector<double> series;         // per-iteration victim cycles, mean over repetitions
  std::vector<double> series_stddev;  // per-iteration dispersion over repetitions
  std::vector<TraceRecord> trace;     // all actors, repetition 0 (only when requested)
};

// Builds the actors for cfg.mode. Throws ConfigError / CapacityError.
std::vector<ActorConfig> build_actors(const DramGeometry& geometry, const ExperimentConfig& cfg);

// Runs cfg.repetitions independent simulations on fresh controllers and
// aggregates the victim's measurements.
RunSummary run_experiment(const DramGeometry& geometry, const ExperimentConfig& cfg, std::uint32_t run_id = 0,
                          bool keep_trace = false);

struct SlowdownReport {
  std::uint32_t attackers = 0;
  Bytes benchmark_bytes = 0;
  Bytes workload_bytes = 0;
  double navigate_total = 0;
  double bomb_total = 0;
  long percent = 0;  // rounded to the nearest integer percent
};

// (bomb - navigate) / navigate * 100, rounded half away from zero.
long percent_increase(double navigate_total, double bomb_total);

// Both summaries must come from configs that differ at most in mode; throws
// ComparisonError otherwise.
SlowdownReport compare_modes(const RunSummary& navigate, const RunSummary& bomb);

struct PointResult {
  ExperimentConfig config{};
  std::optional<RunSummary> summary;
  std::string error;  // set when summary is empty
};

// Runs every grid point (run_id = position in the grid). Points execute on
// up to `max_threads` worker threads (0 = hardware concurrency); results keep
// grid order and per-point failures do not abort the sweep. Throws
// ConfigError for an empty grid.
std::vector<PointResult> sweep(const DramGeometry& geometry, const std::vector<ExperimentConfig>& grid,
                               unsigned max_threads = 0);

}  // namespace dramcontend
