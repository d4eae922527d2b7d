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

#include "dramcontend/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "dramcontend/errors.hpp"
#include "dramcontend/sizes.hpp"

namespace dramcontend {

std::string_view to_string(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::Navigate: return "navigate";
    case ExperimentMode::Bomb: return "bomb";
    case ExperimentMode::VictimOnly: return "victim";
  }
  return "?";
}

ExperimentMode parse_experiment_mode(std::string_view text) {
  if (text == "navigate" || text == "Navigate") return ExperimentMode::Navigate;
  if (text == "bomb" || text == "Bomb" || text == "rowconflict") return ExperimentMode::Bomb;
  if (text == "victim" || text == "VictimOnly" || text == "victim_only") return ExperimentMode::VictimOnly;
  throw ConfigError("mode: expected navigate, bomb or victim, got '" + std::string(text) + "'");
}

void ExperimentConfig::validate(const DramGeometry& geometry) const {
  static constexpr Bytes kBenchmarks[] = {1024, 4 * 1024, 8 * 1024, 16 * 1024};
  if (std::find(std::begin(kBenchmarks), std::end(kBenchmarks), benchmark_bytes) == std::end(kBenchmarks)) {
    throw ConfigError("benchmark: must be one of 1K, 4K, 8K, 16K (got " + format_size(benchmark_bytes) + ")");
  }
  if (benchmark_bytes % geometry.row_slice_bytes() != 0) {
    throw ConfigError("benchmark: must be a multiple of row_slice_bytes");
  }
  if (workload_bytes == 0 || workload_bytes % benchmark_bytes != 0) {
    throw ConfigError("workload: must be a positive multiple of the benchmark size");
  }
  if (workload_bytes > geometry.module_bytes()) throw ConfigError("workload: exceeds module capacity");
  if (repetitions < 1) throw ConfigError("repetitions: must be at least 1");
  timing.validate();

  if (mode == ExperimentMode::VictimOnly) return;

  if (attackers < 1) throw ConfigError("attackers: must be at least 1");
  if (block_slots() < attackers + 1ULL) {
    throw ConfigError("attackers: workload/benchmark = " + std::to_string(block_slots()) +
                      " slots cannot hold the victim and " + std::to_string(attackers) + " attackers");
  }
  if (mode == ExperimentMode::Bomb) {
    if (benchmark_bytes != geometry.row_slice_bytes()) {
      throw ConfigError("benchmark: bomb mode requires a " + format_size(geometry.row_slice_bytes()) + " benchmark");
    }
    const std::uint32_t available = max_same_bank_offsets(geometry, 0);
    if (attackers > available) {
      throw CapacityError("attackers exceeds rows available (max " + std::to_string(available) + ")");
    }
    const Bytes last = same_bank_offsets(geometry, 0, attackers).back();
    if (last + benchmark_bytes > workload_bytes) {
      throw ConfigError("workload: " + format_size(workload_bytes) + " block too small for " +
                        std::to_string(attackers) + " bomb attackers");
    }
  } else if (iterations > nsamples(block_slots(), attackers)) {
    throw ConfigError("iterations: navigate runs at most " + std::to_string(nsamples(block_slots(), attackers)) +
                      " iterations for this workload");
  }
}

IterationPlan ExperimentConfig::plan() const {
  IterationPlan p{0, block_slots()};
  if (mode == ExperimentMode::VictimOnly) {
    p.nsamples = iterations ? iterations : p.block_slots;
  } else {
    p.nsamples = iterations ? iterations : nsamples(p.block_slots, attackers);
  }
  return p;
}

std::vector<ActorConfig> build_actors(const DramGeometry& geometry, const ExperimentConfig& cfg) {
  switch (cfg.mode) {
    case ExperimentMode::Navigate: return build_navigate_actors(cfg.attackers, cfg.benchmark_bytes, cfg.op);
    case ExperimentMode::Bomb: return build_bomb_actors(geometry, cfg.attackers, cfg.benchmark_bytes, cfg.op);
    case ExperimentMode::VictimOnly: return {ActorConfig{0, ActorRole::Victim, cfg.benchmark_bytes, cfg.op, 0}};
  }
  return {};
}

RunSummary run_experiment(const DramGeometry& geometry, const ExperimentConfig& cfg, std::uint32_t run_id,
                          bool keep_trace) {
  cfg.validate(geometry);
  const auto actors = build_actors(geometry, cfg);
  const IterationPlan plan = cfg.plan();

  RunSummary out;
  out.config = cfg;
  out.run_id = run_id;
  out.nsamples = plan.nsamples;
  out.samples = plan.block_slots * cfg.repetitions;
  out.victim_iterations = plan.nsamples * cfg.repetitions;

  std::vector<double> sum(plan.nsamples, 0.0);
  std::vector<double> sum_sq(plan.nsamples, 0.0);
  std::vector<Cycle> all;
  all.reserve(out.victim_iterations);

  RunOptions options;
  options.sync = cfg.sync;
  options.tie_break = cfg.tie_noise ? TieBreak::Seeded : TieBreak::Rotating;
  options.seed = cfg.seed;
  options.block = ContiguousBlock{0, cfg.workload_bytes};

  for (std::uint32_t rep = 0; rep < cfg.repetitions; ++rep) {
    MemoryController controller(geometry, cfg.timing, cfg.policy);
    options.run_id = rep;
    auto trace = run_actors(actors, plan, controller, options);
    for (const auto& r : trace) {
      if (r.role != ActorRole::Victim) continue;
      const auto c = static_cast<double>(r.cycles);
      sum[r.iteration] += c;
      sum_sq[r.iteration] += c * c;
      all.push_back(r.cycles);
      switch (r.outcome_kind) {
        case AccessKind::RowHit: ++out.hit_count; break;
        case AccessKind::RowOpenFromIdle: ++out.open_count; break;
        case AccessKind::RowConflict: ++out.conflict_count; break;
      }
    }
    if (keep_trace && rep == 0) {
      for (auto& r : trace) r.run_id = run_id;
      out.trace = std::move(trace);
    }
  }

  const double reps = cfg.repetitions;
  out.series.resize(plan.nsamples);
  out.series_stddev.resize(plan.nsamples);
  double grand = 0, grand_sq = 0;
  for (std::size_t i = 0; i < plan.nsamples; ++i) {
    out.series[i] = sum[i] / reps;
    out.series_stddev[i] = std::sqrt(std::max(0.0, sum_sq[i] / reps - out.series[i] * out.series[i]));
    grand += sum[i];
    grand_sq += sum_sq[i];
  }
  const double n = static_cast<double>(all.size());
  out.victim_total_cycles = grand / reps;
  out.victim_mean_cycles = grand / n;
  out.victim_stddev_cycles = std::sqrt(std::max(0.0, grand_sq / n - out.victim_mean_cycles * out.victim_mean_cycles));

  std::sort(all.begin(), all.end());
  out.victim_max_cycles = all.back();
  const auto rank = static_cast<std::size_t>(std::ceil(0.99 * n));
  out.victim_p99_cycles = all[std::max<std::size_t>(rank, 1) - 1];
  return out;
}

long percent_increase(double navigate_total, double bomb_total) {
  if (!(navigate_total > 0)) throw ComparisonError("compare: navigate total must be positive");
  return std::lround((bomb_total - navigate_total) / navigate_total * 100.0);
}

SlowdownReport compare_modes(const RunSummary& navigate, const RunSummary& bomb) {
  ExperimentConfig a = navigate.config;
  ExperimentConfig b = bomb.config;
  a.mode = b.mode = ExperimentMode::Navigate;
  if (!(a == b)) {
    throw ComparisonError("compare: summaries differ in more than mode (attackers " +
                          std::to_string(navigate.config.attackers) + " vs " + std::to_string(bomb.config.attackers) +
                          ", benchmark " + format_size(navigate.config.benchmark_bytes) + " vs " +
                          format_size(bomb.config.benchmark_bytes) + ", workload " +
                          format_size(navigate.config.workload_bytes) + " vs " +
                          format_size(bomb.config.workload_bytes) + ")");
  }
  return SlowdownReport{navigate.config.attackers,     navigate.config.benchmark_bytes,
                        navigate.config.workload_bytes, navigate.victim_total_cycles,
                        bomb.victim_total_cycles,       percent_increase(navigate.victim_total_cycles,
                                                                         bomb.victim_total_cycles)};
}

std::vector<PointResult> sweep(const DramGeometry& geometry, const std::vector<ExperimentConfig>& grid,
                               unsigned max_threads) {
  if (grid.empty()) throw ConfigError("sweep: grid is empty");

  std::vector<PointResult> results(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      results[i].config = grid[i];
      try {
        results[i].summary = run_experiment(geometry, grid[i], static_cast<std::uint32_t>(i));
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };

  unsigned threads = max_threads ? max_threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return results;
}

}  // namespace dramcontend
