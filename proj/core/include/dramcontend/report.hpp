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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dramcontend/experiment.hpp"
#include "dramcontend/workloads.hpp"

namespace dramcontend {

// Column order of summary.csv.
const std::vector<std::string>& summary_csv_columns();

// Header plus one row per summary. Floating-point fields use three decimals so
// identical runs produce identical bytes.
void write_summary_csv(std::ostream& out, std::span<const RunSummary> summaries);

// run_id,iteration,victim_cycles_mean
void write_series_csv(std::ostream& out, const RunSummary& summary);

// run_id,actor_id,role,iteration,slot_or_offset,issue_cycle,completion_cycle,cycles,outcome_kind
void write_trace_csv(std::ostream& out, std::span<const TraceRecord> trace);

// Parses summary.csv back into scalar summaries (series and trace stay empty).
// Throws ConfigError naming the first missing column or malformed field.
std::vector<RunSummary> read_summary_csv(std::istream& in);
std::vector<RunSummary> read_summary_csv(const std::filesystem::path& path);

// Human-readable tables, built only from fields present in summary.csv.
std::string format_summary_table(std::span<const RunSummary> summaries);
std::string format_comparison_table(std::span<const SlowdownReport> rows);

// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace dramcontend
