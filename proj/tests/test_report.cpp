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

#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "dramcontend/errors.hpp"
#include "dramcontend/report.hpp"
#include "dramcontend/sizes.hpp"

using namespace dramcontend;

namespace {

std::string csv_of(const std::vector<RunSummary>& s) {
  std::ostringstream out;
  write_summary_csv(out, s);
  return out.str();
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("size literals") {
    CHECK(parse_size("1024") == 1024);
    CHECK(parse_size("1K") == 1024);
    CHECK(parse_size("4KB") == 4096);
    CHECK(parse_size("256k") == 262'144);
    CHECK(parse_size("1M") == 1'048'576);
    CHECK(parse_size("2MB") == 2'097'152);
    CHECK(parse_size("1G") == 1'073'741'824);
    CHECK_THROWS_AS(parse_size(""), ConfigError);
    CHECK_THROWS_AS(parse_size("K"), ConfigError);
    CHECK_THROWS_AS(parse_size("4X"), ConfigError);
    CHECK_THROWS_AS(parse_size("-1K"), ConfigError);
    CHECK_THROWS_AS(parse_size("99999999999999999999G"), ConfigError);
    CHECK_THROWS_AS(parse_size("17179869184G"), ConfigError);
    for (Bytes b : {Bytes{0}, Bytes{1024}, Bytes{1536}, Bytes{2'097'152}, Bytes{3} << 30}) CHECK(parse_size(format_size(b)) == b);
    CHECK(format_size(262'144) == "256K");
  }

  TEST_CASE("summary csv round trip") {
    const DramGeometry g;
    ExperimentConfig c;
    c.mode = ExperimentMode::Bomb;
    c.workload_bytes = 512 * 1024;
    c.attackers = 3;
    c.repetitions = 2;
    c.policy = ArbitrationPolicy::FrFcfs;
    c.timing.refresh_interval_cycles = 7800;
    c.seed = 42;
    c.tie_noise = true;
    c.op = MemoryOp::Read;
    auto s = run_experiment(g, c, 5);

    const std::string first = csv_of({s});
    std::istringstream in(first);
    const auto back = read_summary_csv(in);
    REQUIRE(back.size() == 1);
    CHECK(back[0].config == s.config);
    CHECK(back[0].run_id == 5);
    CHECK(back[0].conflict_count == s.conflict_count);
    CHECK(back[0].victim_max_cycles == s.victim_max_cycles);
    CHECK(csv_of(back) == first);
  }

  TEST_CASE("summary header lists every column") {
    const std::string text = csv_of({});
    for (const auto& col : summary_csv_columns()) CHECK(text.find(col) != std::string::npos);
    CHECK(text.find("victim_total_cycles") != std::string::npos);
  }

  TEST_CASE("missing and malformed columns") {
    std::string text = csv_of({RunSummary{}});
    const auto pos = text.find("hit_count");
    std::string renamed = text;
    renamed.replace(pos, 9, "hits_seen");
    std::istringstream in(renamed);
    CHECK_THROWS_WITH_AS(read_summary_csv(in), "summary: missing column 'hit_count'", ConfigError);

    std::istringstream short_row(text.substr(0, text.find('\n') + 1) + "1,2,3\n");
    CHECK_THROWS_AS(read_summary_csv(short_row), ConfigError);

    std::istringstream empty("");
    CHECK_THROWS_AS(read_summary_csv(empty), ConfigError);
    CHECK_THROWS_AS(read_summary_csv(std::filesystem::path("/nonexistent/summary.csv")), IoError);
  }

  TEST_CASE("series and trace csv") {
    RunSummary s;
    s.run_id = 3;
    s.series = {42.0, 23.5};
    std::ostringstream series;
    write_series_csv(series, s);
    CHECK(series.str() == "run_id,iteration,victim_cycles_mean\n3,0,42.000\n3,1,23.500\n");

    std::vector<TraceRecord> trace{{1, 2, ActorRole::NavigateAttacker, 4, 17, 100, 161, 61, AccessKind::RowConflict}};
    std::ostringstream t;
    write_trace_csv(t, trace);
    CHECK(t.str() ==
          "run_id,actor_id,role,iteration,slot_or_offset,issue_cycle,completion_cycle,cycles,outcome_kind\n"
          "1,2,navigate,4,17,100,161,61,RowConflict\n");
  }

  TEST_CASE("comparison table") {
    const std::vector<SlowdownReport> rows{{1, 1024, 512 * 1024, 318'212, 509'268, 60},
                                           {7, 1024, 512 * 1024, 1000, 1000, 0}};
    const auto table = format_comparison_table(rows);
    CHECK(table.find("Navigate") != std::string::npos);
    CHECK(table.find("RowConflict") != std::string::npos);
    CHECK(table.find("+60%") != std::string::npos);
    CHECK(table.find("+0%") != std::string::npos);
    CHECK(table.find("512K") != std::string::npos);
  }

  TEST_CASE("write_text_file errors") {
    CHECK_THROWS_AS(write_text_file("/proc/definitely/not/here.csv", "x"), IoError);
  }
}
