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

#include "dramcontend/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "dramcontend/errors.hpp"
#include "dramcontend/sizes.hpp"

namespace dramcontend {
namespace {

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <typename T>
T parse_number(const std::string& text, const std::string& column) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ConfigError("summary: column '" + column + "' has malformed value '" + text + "'");
  }
  return value;
}

}  // namespace

const std::vector<std::string>& summary_csv_columns() {
  static const std::vector<std::string> columns = {
      "run_id",          "mode",
      "op",              "benchmark_bytes",
      "workload_bytes",  "attackers",
      "repetitions",     "policy",
      "sync",            "tie_noise",
      "seed",            "cas_cycles",
      "rcd_cycles",      "rp_cycles",
      "bus_transfer_cycles", "refresh_interval_cycles",
      "refresh_duration_cycles", "nsamples",
      "samples",         "victim_iterations",
      "victim_total_cycles", "victim_mean_cycles",
      "victim_max_cycles", "victim_p99_cycles",
      "victim_stddev_cycles", "conflict_count",
      "hit_count",       "open_count",
  };
  return columns;
}

void write_summary_csv(std::ostream& out, std::span<const RunSummary> summaries) {
  const auto& cols = summary_csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& s : summaries) {
    const auto& c = s.config;
    const auto& t = c.timing;
    out << s.run_id << ',' << to_string(c.mode) << ',' << to_string(c.op) << ',' << c.benchmark_bytes << ','
        << c.workload_bytes << ',' << c.effective_attackers() << ',' << c.repetitions << ',' << to_string(c.policy)
        << ',' << to_string(c.sync) << ',' << (c.tie_noise ? 1 : 0) << ',' << c.seed << ',' << t.cas_cycles << ','
        << t.rcd_cycles << ',' << t.rp_cycles << ',' << t.bus_transfer_cycles << ',' << t.refresh_interval_cycles
        << ',' << t.refresh_duration_cycles << ',' << s.nsamples << ',' << s.samples << ',' << s.victim_iterations
        << ',' << fixed3(s.victim_total_cycles) << ',' << fixed3(s.victim_mean_cycles) << ',' << s.victim_max_cycles
        << ',' << s.victim_p99_cycles << ',' << fixed3(s.victim_stddev_cycles) << ',' << s.conflict_count << ','
        << s.hit_count << ',' << s.open_count << '\n';
  }
}

void write_series_csv(std::ostream& out, const RunSummary& summary) {
  out << "run_id,iteration,victim_cycles_mean\n";
  for (std::size_t i = 0; i < summary.series.size(); ++i) {
    out << summary.run_id << ',' << i << ',' << fixed3(summary.series[i]) << '\n';
  }
}

void write_trace_csv(std::ostream& out, std::span<const TraceRecord> trace) {
  out << "run_id,actor_id,role,iteration,slot_or_offset,issue_cycle,completion_cycle,cycles,outcome_kind\n";
  for (const auto& r : trace) {
    out << r.run_id << ',' << r.actor_id << ',' << to_string(r.role) << ',' << r.iteration << ','
        << r.slot_or_offset << ',' << r.issue_cycle << ',' << r.completion_cycle << ',' << r.cycles << ','
        << to_string(r.outcome_kind) << '\n';
  }
}

std::vector<RunSummary> read_summary_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("summary: empty file");
  const auto header = split_csv_line(line);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < header.size(); ++i) index[header[i]] = i;
  for (const auto& col : summary_csv_columns()) {
    if (!index.contains(col)) throw ConfigError("summary: missing column '" + col + "'");
  }

  std::vector<RunSummary> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw ConfigError("summary: row has " + std::to_string(fields.size()) + " fields, header has " +
                        std::to_string(header.size()));
    }
    auto str = [&](const std::string& col) { return fields[index.at(col)]; };
    auto u64 = [&](const std::string& col) { return parse_number<std::uint64_t>(str(col), col); };
    auto dbl = [&](const std::string& col) { return parse_number<double>(str(col), col); };

    RunSummary s;
    auto& c = s.config;
    s.run_id = static_cast<std::uint32_t>(u64("run_id"));
    c.mode = parse_experiment_mode(str("mode"));
    c.op = parse_memory_op(str("op"));
    c.benchmark_bytes = u64("benchmark_bytes");
    c.workload_bytes = u64("workload_bytes");
    c.attackers = static_cast<std::uint32_t>(u64("attackers"));
    c.repetitions = static_cast<std::uint32_t>(u64("repetitions"));
    c.policy = parse_policy(str("policy"));
    c.sync = parse_sync_mode(str("sync"));
    c.tie_noise = u64("tie_noise") != 0;
    c.seed = u64("seed");
    c.timing.cas_cycles = u64("cas_cycles");
    c.timing.rcd_cycles = u64("rcd_cycles");
    c.timing.rp_cycles = u64("rp_cycles");
    c.timing.bus_transfer_cycles = u64("bus_transfer_cycles");
    c.timing.refresh_interval_cycles = u64("refresh_interval_cycles");
    c.timing.refresh_duration_cycles = u64("refresh_duration_cycles");
    s.nsamples = u64("nsamples");
    s.samples = u64("samples");
    s.victim_iterations = u64("victim_iterations");
    s.victim_total_cycles = dbl("victim_total_cycles");
    s.victim_mean_cycles = dbl("victim_mean_cycles");
    s.victim_max_cycles = u64("victim_max_cycles");
    s.victim_p99_cycles = u64("victim_p99_cycles");
    s.victim_stddev_cycles = dbl("victim_stddev_cycles");
    s.conflict_count = u64("conflict_count");
    s.hit_count = u64("hit_count");
    s.open_count = u64("open_count");
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<RunSummary> read_summary_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_summary_csv(in);
}

std::string format_summary_table(std::span<const RunSummary> summaries) {
  std::ostringstream out;
  out << std::left << std::setw(5) << "run" << std::setw(10) << "mode" << std::setw(7) << "bench" << std::setw(10)
      << "workload" << std::setw(10) << "attackers" << std::setw(6) << "reps" << std::right << std::setw(10)
      << "nsamples" << std::setw(16) << "victim_total" << std::setw(11) << "mean" << std::setw(8) << "max"
      << std::setw(8) << "p99" << std::setw(11) << "conflicts" << std::setw(10) << "hits" << std::setw(8) << "opens"
      << '\n';
  for (const auto& s : summaries) {
    const auto& c = s.config;
    out << std::left << std::setw(5) << s.run_id << std::setw(10) << to_string(c.mode) << std::setw(7)
        << format_size(c.benchmark_bytes) << std::setw(10) << format_size(c.workload_bytes) << std::setw(10)
        << c.effective_attackers() << std::setw(6) << c.repetitions << std::right << std::setw(10) << s.nsamples
        << std::setw(16) << fixed3(s.victim_total_cycles) << std::setw(11) << fixed3(s.victim_mean_cycles)
        << std::setw(8) << s.victim_max_cycles << std::setw(8) << s.victim_p99_cycles << std::setw(11)
        << s.conflict_count << std::setw(10) << s.hit_count << std::setw(8) << s.open_count << '\n';
  }
  return out.str();
}

std::string format_comparison_table(std::span<const SlowdownReport> rows) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "Attackers" << std::setw(11) << "Benchmark" << std::setw(8) << "Size"
      << std::right << std::setw(16) << "Navigate" << std::setw(16) << "RowConflict" << std::setw(9) << "+/- %"
      << '\n';
  for (const auto& r : rows) {
    const std::string pct = (r.percent >= 0 ? "+" : "") + std::to_string(r.percent) + "%";
    out << std::left << std::setw(10) << r.attackers << std::setw(11) << format_size(r.benchmark_bytes)
        << std::setw(8) << format_size(r.workload_bytes) << std::right << std::setw(16) << fixed3(r.navigate_total)
        << std::setw(16) << fixed3(r.bomb_total) << std::setw(9) << pct << '\n';
  }
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out.flush()) throw IoError("failed writing " + path.string());
}

}  // namespace dramcontend
