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

#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dramcontend/address_map.hpp"
#include "dramcontend/config.hpp"
#include "dramcontend/errors.hpp"
#include "dramcontend/experiment.hpp"
#include "dramcontend/report.hpp"
#include "dramcontend/sizes.hpp"

namespace dramcontend::cli {
namespace {

namespace fs = std::filesystem;

std::vector<Cycle> parse_cycle_list(const std::string& text, std::size_t count, const std::string& flag,
                                    const std::string& shape) {
  std::vector<Cycle> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    Cycle v{};
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw ConfigError(flag + ": expected " + shape + ", got '" + text + "'");
    }
    values.push_back(v);
  }
  if (values.size() != count) throw ConfigError(flag + ": expected " + shape + ", got '" + text + "'");
  return values;
}

struct RunFlags {
  std::string config;
  std::string mode, benchmark, workload, policy, timing, refresh, op, sync;
  std::uint32_t attackers = 0;
  std::uint32_t reps = 0;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  bool tie_noise = false;
  bool trace = false;
  std::string out;

  CLI::Option* o_mode = nullptr;
  CLI::Option* o_benchmark = nullptr;
  CLI::Option* o_workload = nullptr;
  CLI::Option* o_attackers = nullptr;
  CLI::Option* o_reps = nullptr;
  CLI::Option* o_policy = nullptr;
  CLI::Option* o_timing = nullptr;
  CLI::Option* o_refresh = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_op = nullptr;
  CLI::Option* o_sync = nullptr;
  CLI::Option* o_tie_noise = nullptr;
  CLI::Option* o_iterations = nullptr;

  void apply(ExperimentConfig& cfg) const {
    if (o_mode->count()) cfg.mode = parse_experiment_mode(mode);
    if (o_benchmark->count()) cfg.benchmark_bytes = parse_size(benchmark);
    if (o_workload->count()) cfg.workload_bytes = parse_size(workload);
    if (o_attackers->count()) cfg.attackers = attackers;
    if (o_reps->count()) cfg.repetitions = reps;
    if (o_policy->count()) cfg.policy = parse_policy(policy);
    if (o_timing->count()) {
      const auto v = parse_cycle_list(timing, 3, "--timing", "cl,rcd,rp");
      cfg.timing.cas_cycles = v[0];
      cfg.timing.rcd_cycles = v[1];
      cfg.timing.rp_cycles = v[2];
    }
    if (o_refresh->count()) {
      const auto v = parse_cycle_list(refresh, 2, "--refresh", "interval,duration");
      cfg.timing.refresh_interval_cycles = v[0];
      cfg.timing.refresh_duration_cycles = v[1];
    }
    if (o_seed->count()) cfg.seed = seed;
    if (o_op->count()) cfg.op = parse_memory_op(op);
    if (o_sync->count()) cfg.sync = parse_sync_mode(sync);
    if (o_tie_noise->count()) cfg.tie_noise = tie_noise;
    if (o_iterations->count()) cfg.iterations = iterations;
  }
};

void add_run_flags(CLI::App& cmd, RunFlags& f) {
  cmd.add_option("--config", f.config, "YAML configuration file");
  f.o_mode = cmd.add_option("--mode", f.mode, "navigate | bomb | victim");
  f.o_benchmark = cmd.add_option("--benchmark", f.benchmark, "victim request size (1K, 4K, 8K, 16K)");
  f.o_workload = cmd.add_option("--workload", f.workload, "shared block size (e.g. 256K, 2M)");
  f.o_attackers = cmd.add_option("--attackers", f.attackers, "attacker actor count");
  f.o_reps = cmd.add_option("--reps", f.reps, "repetitions");
  f.o_policy = cmd.add_option("--policy", f.policy, "fcfs | frfcfs");
  f.o_timing = cmd.add_option("--timing", f.timing, "cl,rcd,rp in cycles");
  f.o_refresh = cmd.add_option("--refresh", f.refresh, "interval,duration in cycles (0,0 disables)");
  f.o_seed = cmd.add_option("--seed", f.seed, "seed for tie noise");
  f.o_op = cmd.add_option("--op", f.op, "write | read");
  f.o_sync = cmd.add_option("--sync", f.sync, "lockstep | free");
  f.o_tie_noise = cmd.add_flag("--tie-noise", f.tie_noise, "seeded order for same-cycle ties");
  f.o_iterations = cmd.add_option("--iterations", f.iterations, "victim iterations (0 derives from workload)");
  cmd.add_flag("--trace", f.trace, "also write trace_<run>.csv");
  cmd.add_option("--out", f.out, "output directory");
}

fs::path output_dir(const std::string& flag, const SimulationConfig& sim) {
  if (!flag.empty()) return flag;
  return sim.output_dir.value_or(".");
}

std::string series_name(std::uint32_t run_id) { return "series_" + std::to_string(run_id) + ".csv"; }

std::string summary_csv(std::span<const RunSummary> summaries) {
  std::ostringstream s;
  write_summary_csv(s, summaries);
  return s.str();
}

void write_series(const fs::path& dir, const RunSummary& summary) {
  std::ostringstream s;
  write_series_csv(s, summary);
  write_text_file(dir / series_name(summary.run_id), s.str());
}

int cmd_run(const RunFlags& f, std::ostream& out) {
  const SimulationConfig sim = f.config.empty() ? SimulationConfig{} : load_config(f.config);
  ExperimentConfig cfg = sim.experiment;
  f.apply(cfg);
  const DramGeometry geometry(sim.geometry);
  const bool trace = f.trace || sim.write_trace;

  const RunSummary summary = run_experiment(geometry, cfg, 0, trace);
  const fs::path dir = output_dir(f.out, sim);
  write_text_file(dir / "summary.csv", summary_csv({&summary, 1}));
  write_series(dir, summary);
  if (trace) {
    std::ostringstream s;
    write_trace_csv(s, summary.trace);
    write_text_file(dir / "trace_0.csv", s.str());
  }
  out << format_summary_table({&summary, 1});
  return 0;
}

std::string describe(const ExperimentConfig& c) {
  return std::string(to_string(c.mode)) + " " + format_size(c.benchmark_bytes) + "/" + format_size(c.workload_bytes) +
         " attackers=" + std::to_string(c.effective_attackers());
}

int cmd_sweep(const std::string& config, const std::string& out_flag, unsigned threads, std::ostream& out,
              std::ostream& err) {
  const SimulationConfig sim = load_config(config);
  if (sim.grid.empty()) throw ConfigError("sweep: config has no 'grid' section");
  const DramGeometry geometry(sim.geometry);
  const auto results = sweep(geometry, sim.grid, threads);

  std::vector<RunSummary> ok;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out << "[" << (i + 1) << "/" << results.size() << "] " << describe(r.config);
    if (r.summary) {
      out << " ok victim_total=" << r.summary->victim_total_cycles << '\n';
      ok.push_back(*r.summary);
    } else {
      out << " failed\n";
      err << "point " << i << ": " << r.error << '\n';
    }
  }

  const fs::path dir = output_dir(out_flag, sim);
  write_text_file(dir / "summary.csv", summary_csv(ok));
  for (const auto& s : ok) write_series(dir, s);
  out << format_summary_table(ok);
  return ok.empty() ? 1 : 0;
}

int cmd_compare(const std::string& navigate_path, const std::string& bomb_path, std::ostream& out) {
  const auto navigate = read_summary_csv(fs::path(navigate_path));
  const auto bomb = read_summary_csv(fs::path(bomb_path));
  if (navigate.size() != bomb.size()) {
    throw ComparisonError("compare: " + std::to_string(navigate.size()) + " navigate rows vs " +
                          std::to_string(bomb.size()) + " bomb rows");
  }
  std::vector<SlowdownReport> rows;
  for (std::size_t i = 0; i < navigate.size(); ++i) rows.push_back(compare_modes(navigate[i], bomb[i]));
  out << format_comparison_table(rows);
  return 0;
}

int cmd_decompose(const std::string& offset_text, const std::string& config, std::ostream& out) {
  const GeometryParams params = config.empty() ? GeometryParams{} : load_geometry(config);
  const DramGeometry geometry(params);
  const Bytes offset = parse_size(offset_text);
  const DramAddress a = decompose(geometry, offset);
  out << offset << ',' << a.chip << ',' << a.bank_group << ',' << a.bank << ',' << a.flat_bank << ',' << a.row
      << ',' << a.column << '\n';
  return 0;
}

const CLI::App& deepest_parsed(const CLI::App& app) {
  for (const auto* sub : app.get_subcommands()) return deepest_parsed(*sub);
  return app;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"DDR4 bank contention simulator", "dramcontend"};
  app.require_subcommand(1);

  RunFlags run;
  auto* run_cmd = app.add_subcommand("run", "run one experiment, write summary.csv and series_0.csv");
  add_run_flags(*run_cmd, run);

  std::string sweep_config, sweep_out;
  unsigned sweep_threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "run every point of the config's grid section");
  sweep_cmd->add_option("--config", sweep_config, "YAML configuration file with a grid section")->required();
  sweep_cmd->add_option("--out", sweep_out, "output directory");
  sweep_cmd->add_option("--threads", sweep_threads, "worker threads (0 = hardware concurrency)");

  std::string navigate_csv, bomb_csv;
  auto* compare_cmd = app.add_subcommand("compare", "tabulate bomb vs navigate victim totals");
  compare_cmd->add_option("navigate", navigate_csv, "navigate summary.csv")->required();
  compare_cmd->add_option("bomb", bomb_csv, "bomb summary.csv")->required();

  std::string offset, decompose_config;
  auto* decompose_cmd = app.add_subcommand("decompose", "print offset,chip,bank_group,bank,flat_bank,row,column");
  decompose_cmd->add_option("offset", offset, "byte offset (suffixes allowed)")->required();
  decompose_cmd->add_option("--config", decompose_config, "YAML file with a geometry section");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << deepest_parsed(app).help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << deepest_parsed(app).help();
    return 1;
  }

  try {
    if (*run_cmd) return cmd_run(run, out);
    if (*sweep_cmd) return cmd_sweep(sweep_config, sweep_out, sweep_threads, out, err);
    if (*compare_cmd) return cmd_compare(navigate_csv, bomb_csv, out);
    if (*decompose_cmd) return cmd_decompose(offset, decompose_config, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace dramcontend::cli
